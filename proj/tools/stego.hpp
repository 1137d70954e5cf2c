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

// Hiding a number in the order of a list of distinct lines. The cover order
// is the lexicographic sort of the lines; the hidden number is the rank of
// the observed order relative to it.

#ifndef HFRANK_TOOLS_STEGO_HPP_
#define HFRANK_TOOLS_STEGO_HPP_

#include <string>
#include <vector>

#include "hfrank/nat.hpp"

namespace hfrank::stego {

// log2(count!), the number of bits a list of `count` lines can carry.
double CapacityBits(std::size_t count);

// Line i of the result is sorted(items)[PermUnrank(count, secret)[i]].
// Throws kDomain on duplicate lines and kRankOverflow (with the capacity in
// the message) when secret >= count!.
std::vector<std::string> Embed(std::vector<std::string> items,
                               const Nat& secret);

// Throws kDomain when `permuted` is not a reordering of `cover` or either
// contains duplicates.
Nat Extract(std::vector<std::string> cover,
            const std::vector<std::string>& permuted);

}  // namespace hfrank::stego

#endif  // HFRANK_TOOLS_STEGO_HPP_
