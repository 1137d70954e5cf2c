// Copyright 2026 The hfrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Flat bijections between naturals and finite sets, finite functions and
// run-length lists. Each Nat -> sequence direction is total; the reverse
// direction validates its input where the sequence has a canonical shape.

#ifndef HFRANK_CODECS_HPP_
#define HFRANK_CODECS_HPP_

#include <span>
#include <vector>

#include "hfrank/nat.hpp"
#include "hfrank/natbits.hpp"

namespace hfrank {

// Strictly increasing.
using NatSet = std::vector<Nat>;
// Values at 0, 1, 2, ...
using FiniteFunc = std::vector<Nat>;
// Element i is the length minus one of the i-th run of equal bits, least
// significant run first. The last run is always a run of ones.
using RleList = std::vector<Nat>;

// Ackermann step: sum of 2^e. Throws kNonCanonicalSet unless the input is
// strictly increasing.
Nat SetToNat(std::span<const Nat> set);
// Positions of the one bits of n, ascending.
NatSet NatToSet(const Nat& n);

// result[i] = f[0] + ... + f[i] + i.
NatSet FunToSet(std::span<const Nat> fun);
// Gaps between consecutive elements, minus one. Throws kNonCanonicalSet
// unless strictly increasing.
FiniteFunc SetToFun(std::span<const Nat> set);

FiniteFunc NatToFun(const Nat& n);
Nat FunToNat(std::span<const Nat> fun);

// {} -> 0, otherwise PepisPair(size - 1, TupleEncode(t)). Accepts {0}, which
// collides with {} at 0; see IsCanonicalFtuple.
Nat FtupleToNat(std::span<const Nat> tuple);
// 0 -> {}, otherwise the tuple whose length and bit pattern are recovered
// by PepisUnpair then TupleDecode.
std::vector<Nat> NatToFtuple(const Nat& n);
// False only for the singleton {0}, the one tuple NatToFtuple never yields.
bool IsCanonicalFtuple(std::span<const Nat> tuple);

// Expects an empty or canonical bit list (last bit 1). Throws kInvalidDigit
// on a non-bit element and kDomain on a trailing zero.
RleList BitsToRle(std::span<const std::uint8_t> bits);
// Throws kOverflow for run lengths that cannot be materialized.
BitList RleToBits(std::span<const Nat> runs);

// 0 -> {}.
RleList NatToRle(const Nat& n);
Nat RleToNat(std::span<const Nat> runs);

}  // namespace hfrank

#endif  // HFRANK_CODECS_HPP_
