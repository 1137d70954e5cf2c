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

// Permutation ranking through Lehmer codes read as factoradic numerals, and
// a bijection between naturals and permutations of every size. Sizes are
// laid out in consecutive blocks: permutations of size k occupy the codes
// [FactorialSum(k), FactorialSum(k) + k!).

#ifndef HFRANK_PERMCODEC_HPP_
#define HFRANK_PERMCODEC_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hfrank/nat.hpp"

namespace hfrank {

// Contains exactly 0..size-1, in some order.
using Perm = std::vector<std::size_t>;
// code[i] is the index of perm[i] among the values not yet used by
// perm[0..i-1]; hence code[i] <= size-1-i.
using LehmerCode = std::vector<std::size_t>;

struct SizedRank {
  std::size_t size = 0;
  Nat rank;

  friend bool operator==(const SizedRank&, const SizedRank&) = default;
};

bool IsPermutation(std::span<const std::size_t> p);

// Throws kInvalidPermutation.
LehmerCode LehmerEncode(std::span<const std::size_t> perm);
// Throws kInvalidLehmer when code[i] > size-1-i.
Perm LehmerDecode(std::span<const std::size_t> code);

// Rank among permutations of the same size. Throws kInvalidPermutation,
// including for the empty permutation.
SizedRank PermRank(std::span<const std::size_t> perm);
// Throws kRankOverflow unless rank < size!. Size 0 admits only rank 0.
Perm PermUnrank(std::size_t size, const Nat& rank);

// 0! + 1! + ... + (n-1)!, so FactorialSum(0) = 0.
Nat FactorialSum(std::size_t n);
// The k >= 1 and r with FactorialSum(k) + r = n < FactorialSum(k + 1).
// Throws kDomain for n = 0.
SizedRank SplitFactorialSum(const Nat& n);

Perm NatToPerm(const Nat& n);
Nat PermToNat(std::span<const std::size_t> perm);

}  // namespace hfrank

#endif  // HFRANK_PERMCODEC_HPP_
