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

#include "hfrank/codecs.hpp"

#include <string>

#include "hfrank/error.hpp"
#include "hfrank/pairing.hpp"

namespace hfrank {
namespace {

void CheckStrictlyIncreasing(std::span<const Nat> set) {
  for (std::size_t i = 1; i < set.size(); ++i) {
    if (!(set[i - 1] < set[i])) {
      throw CodecError(ErrorCode::kNonCanonicalSet,
                       "elements must be strictly increasing; " +
                           set[i - 1].ToString() + " precedes " +
                           set[i].ToString() + " at position " +
                           std::to_string(i));
    }
  }
}

}  // namespace

Nat SetToNat(std::span<const Nat> set) {
  CheckStrictlyIncreasing(set);
  Nat n;
  for (const Nat& e : set) n.SetBit(e.ToSize());
  return n;
}

NatSet NatToSet(const Nat& n) {
  NatSet set;
  const std::size_t len = n.BitLength();
  for (std::size_t p = n.IsZero() ? len : n.ScanOne(0); p < len;
       p = n.ScanOne(p + 1)) {
    set.emplace_back(p);
  }
  return set;
}

NatSet FunToSet(std::span<const Nat> fun) {
  NatSet set;
  set.reserve(fun.size());
  Nat acc;
  for (std::size_t i = 0; i < fun.size(); ++i) {
    acc += fun[i];
    if (i > 0) acc += Nat(1);
    set.push_back(acc);
  }
  return set;
}

FiniteFunc SetToFun(std::span<const Nat> set) {
  CheckStrictlyIncreasing(set);
  FiniteFunc fun;
  fun.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    fun.push_back(i == 0 ? set[0] : set[i] - set[i - 1] - Nat(1));
  }
  return fun;
}

FiniteFunc NatToFun(const Nat& n) { return SetToFun(NatToSet(n)); }

Nat FunToNat(std::span<const Nat> fun) { return SetToNat(FunToSet(fun)); }

Nat FtupleToNat(std::span<const Nat> tuple) {
  if (tuple.empty()) return Nat();
  return PepisPair(Nat(tuple.size() - 1), TupleEncode(tuple));
}

std::vector<Nat> NatToFtuple(const Nat& n) {
  if (n.IsZero()) return {};
  PairResult kf = PepisUnpair(n);
  return TupleDecode(kf.x.ToSize() + 1, kf.y);
}

bool IsCanonicalFtuple(std::span<const Nat> tuple) {
  return !(tuple.size() == 1 && tuple[0].IsZero());
}

RleList BitsToRle(std::span<const std::uint8_t> bits) {
  RleList runs;
  if (bits.empty()) return runs;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      throw CodecError(ErrorCode::kInvalidDigit,
                       "bit list element " + std::to_string(bits[i]));
    }
  }
  if (bits.back() != 1) {
    throw CodecError(ErrorCode::kDomain,
                     "bit list must end with its most significant one bit");
  }
  std::size_t start = 0;
  for (std::size_t i = 1; i <= bits.size(); ++i) {
    if (i == bits.size() || bits[i] != bits[start]) {
      runs.emplace_back(i - start - 1);
      start = i;
    }
  }
  return runs;
}

BitList RleToBits(std::span<const Nat> runs) {
  BitList bits;
  // Runs alternate and the last one is ones, so parity from the end fixes
  // the value of every run.
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::uint8_t bit = (runs.size() - 1 - i) % 2 == 0 ? 1 : 0;
    bits.insert(bits.end(), runs[i].ToSize() + 1, bit);
  }
  return bits;
}

RleList NatToRle(const Nat& n) {
  RleList runs;
  const std::size_t len = n.BitLength();
  std::size_t pos = 0;
  while (pos < len) {
    const std::size_t next = n.TestBit(pos) ? n.ScanZero(pos) : n.ScanOne(pos);
    runs.emplace_back(next - pos - 1);
    pos = next;
  }
  return runs;
}

Nat RleToNat(std::span<const Nat> runs) {
  Nat n;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::size_t len = runs[i].ToSize() + 1;
    if ((runs.size() - 1 - i) % 2 == 0) {
      Nat ones = Nat::PowerOfTwo(len) - Nat(1);
      n += ones << pos;
    }
    pos += len;
  }
  return n;
}

}  // namespace hfrank
