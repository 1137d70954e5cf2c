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

#ifndef HFRANK_PAIRING_HPP_
#define HFRANK_PAIRING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hfrank/nat.hpp"

namespace hfrank {

struct PairResult {
  Nat x;
  Nat y;

  friend bool operator==(const PairResult&, const PairResult&) = default;
};

// Arity is the size of the vector.
using KTuple = std::vector<Nat>;

// 2^x * (2y + 1) - 1. Exponential in x, linear in y.
Nat PepisPair(const Nat& x, const Nat& y);

// x is the number of trailing zero bits of z + 1, y the odd part shifted
// down by one.
PairResult PepisUnpair(const Nat& z);

// Splits n into `arity` parts: the digits of n in base 2^arity form the
// rows of a bit matrix whose columns are the parts. Bit i*arity + j of n is
// bit i of part j. Throws kInvalidArity when arity == 0.
KTuple TupleDecode(std::size_t arity, const Nat& n);

// Inverse of TupleDecode(parts.size(), .). Throws kEmptyInput on an empty
// tuple.
Nat TupleEncode(std::span<const Nat> parts);

// Two-way bit interleaving, the arity-2 instance of the tuple codec.
Nat Pair2(const Nat& x, const Nat& y);
PairResult Unpair2(const Nat& n);

}  // namespace hfrank

#endif  // HFRANK_PAIRING_HPP_
