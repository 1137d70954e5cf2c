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

#include "hfrank/permcodec.hpp"

#include <bit>
#include <string>

#include "hfrank/error.hpp"
#include "hfrank/factoradic.hpp"

namespace hfrank {
namespace {

// Counts of still-available values 0..n-1, for O(log n) "index among the
// remaining" queries in both Lehmer directions.
class AvailablePool {
 public:
  explicit AvailablePool(std::size_t n) : tree_(n + 1, 0) {
    for (std::size_t i = 1; i <= n; ++i) {
      tree_[i] += 1;
      const std::size_t parent = i + (i & (~i + 1));
      if (parent <= n) tree_[parent] += tree_[i];
    }
  }

  // Available values strictly below v.
  std::size_t CountBelow(std::size_t v) const {
    std::size_t sum = 0;
    for (std::size_t i = v; i > 0; i &= i - 1) sum += tree_[i];
    return sum;
  }

  // The available value with exactly k available values below it.
  // Precondition: k < number of available values.
  std::size_t Select(std::size_t k) const {
    const std::size_t n = tree_.size() - 1;
    std::size_t pos = 0;
    for (std::size_t step = std::bit_floor(n); step > 0; step >>= 1) {
      if (pos + step <= n && tree_[pos + step] <= k) {
        pos += step;
        k -= tree_[pos];
      }
    }
    return pos;
  }

  void Remove(std::size_t v) {
    for (std::size_t i = v + 1; i < tree_.size(); i += i & (~i + 1)) {
      tree_[i] -= 1;
    }
  }

 private:
  std::vector<std::size_t> tree_;
};

void CheckPermutation(std::span<const std::size_t> p) {
  if (!IsPermutation(p)) {
    throw CodecError(ErrorCode::kInvalidPermutation,
                     "sequence of length " + std::to_string(p.size()) +
                         " is not a permutation of 0.." +
                         std::to_string(p.size()) + "-1");
  }
}

}  // namespace

bool IsPermutation(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

LehmerCode LehmerEncode(std::span<const std::size_t> perm) {
  CheckPermutation(perm);
  AvailablePool pool(perm.size());
  LehmerCode code(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    code[i] = pool.CountBelow(perm[i]);
    pool.Remove(perm[i]);
  }
  return code;
}

Perm LehmerDecode(std::span<const std::size_t> code) {
  const std::size_t n = code.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (code[i] > n - 1 - i) {
      throw CodecError(ErrorCode::kInvalidLehmer,
                       "entry " + std::to_string(code[i]) + " at position " +
                           std::to_string(i) + " exceeds " +
                           std::to_string(n - 1 - i));
    }
  }
  AvailablePool pool(n);
  Perm perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = pool.Select(code[i]);
    pool.Remove(perm[i]);
  }
  return perm;
}

SizedRank PermRank(std::span<const std::size_t> perm) {
  if (perm.empty()) {
    throw CodecError(ErrorCode::kInvalidPermutation,
                     "the empty permutation has no size-relative rank");
  }
  return {perm.size(), FactDescValue(LehmerEncode(perm))};
}

Perm PermUnrank(std::size_t size, const Nat& rank) {
  if (size == 0) {
    if (!rank.IsZero()) {
      throw CodecError(ErrorCode::kRankOverflow,
                       "size 0 admits only rank 0, got " + rank.ToString());
    }
    return {};
  }
  FactDigits digits = ToFactDesc(rank);
  if (digits.size() > size) {
    throw CodecError(ErrorCode::kRankOverflow,
                     "rank " + rank.ToString() + " is not below " +
                         std::to_string(size) + "!");
  }
  LehmerCode code(size - digits.size(), 0);
  code.insert(code.end(), digits.begin(), digits.end());
  return LehmerDecode(code);
}

Nat FactorialSum(std::size_t n) {
  Nat sum;
  Nat factorial(1);
  for (std::size_t k = 0; k < n; ++k) {
    sum += factorial;
    factorial *= Nat(k + 1);
  }
  return sum;
}

SizedRank SplitFactorialSum(const Nat& n) {
  if (n.IsZero()) {
    throw CodecError(ErrorCode::kDomain,
                     "0 lies before the first factorial-sum block");
  }
  // Invariant: start = FactorialSum(k), factorial = k!.
  std::size_t k = 1;
  Nat start(1);
  Nat factorial(1);
  while (n >= start + factorial) {
    start += factorial;
    ++k;
    factorial *= Nat(k);
  }
  return {k, n - start};
}

Perm NatToPerm(const Nat& n) {
  if (n.IsZero()) return {};
  SizedRank split = SplitFactorialSum(n);
  return PermUnrank(split.size, split.rank);
}

Nat PermToNat(std::span<const std::size_t> perm) {
  if (perm.empty()) return Nat();
  SizedRank r = PermRank(perm);
  return FactorialSum(r.size) + r.rank;
}

}  // namespace hfrank
