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

#include "hfrank/pairing.hpp"

#include "hfrank/error.hpp"

namespace hfrank {

Nat PepisPair(const Nat& x, const Nat& y) {
  Nat odd = (y << 1) + Nat(1);
  return (odd << x.ToSize()) - Nat(1);
}

PairResult PepisUnpair(const Nat& z) {
  const Nat z1 = z + Nat(1);
  const std::size_t x = z1.TrailingZeros();
  return {Nat(x), (z1 >> x) >> 1};
}

// The matrix formulation (digits in base 2^k, pad each to k bits, transpose,
// read rows) reduces to a stride-k gather over the bits of n. Only set bits
// are visited.
KTuple TupleDecode(std::size_t arity, const Nat& n) {
  if (arity == 0) {
    throw CodecError(ErrorCode::kInvalidArity, "tuple arity must be >= 1");
  }
  KTuple parts(arity);
  if (arity == 1) {
    parts[0] = n;
    return parts;
  }
  const std::size_t len = n.BitLength();
  for (std::size_t p = n.IsZero() ? len : n.ScanOne(0); p < len;
       p = n.ScanOne(p + 1)) {
    parts[p % arity].SetBit(p / arity);
  }
  return parts;
}

Nat TupleEncode(std::span<const Nat> parts) {
  if (parts.empty()) {
    throw CodecError(ErrorCode::kEmptyInput, "cannot encode an empty tuple");
  }
  const std::size_t arity = parts.size();
  if (arity == 1) return parts[0];
  Nat n;
  for (std::size_t j = 0; j < arity; ++j) {
    const Nat& part = parts[j];
    const std::size_t len = part.BitLength();
    for (std::size_t i = part.IsZero() ? len : part.ScanOne(0); i < len;
         i = part.ScanOne(i + 1)) {
      n.SetBit(i * arity + j);
    }
  }
  return n;
}

Nat Pair2(const Nat& x, const Nat& y) {
  const Nat parts[] = {x, y};
  return TupleEncode(parts);
}

PairResult Unpair2(const Nat& n) {
  KTuple parts = TupleDecode(2, n);
  return {std::move(parts[0]), std::move(parts[1])};
}

}  // namespace hfrank
