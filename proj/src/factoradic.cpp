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

#include "hfrank/factoradic.hpp"

#include <algorithm>
#include <string>

#include "hfrank/error.hpp"

namespace hfrank {

FactDigits ToFactAsc(const Nat& n) {
  if (n.IsZero()) return {0};
  FactDigits digits;
  Nat rest = n;
  for (std::uint64_t radix = 1; !rest.IsZero(); ++radix) {
    digits.push_back(static_cast<std::size_t>(rest.DivRemSmall(radix)));
  }
  return digits;
}

FactDigits ToFactDesc(const Nat& n) {
  FactDigits digits = ToFactAsc(n);
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Nat FactDescValue(std::span<const std::size_t> digits) {
  if (digits.empty()) {
    throw CodecError(ErrorCode::kInvalidFactoradic, "no digits");
  }
  if (digits.back() != 0) {
    throw CodecError(ErrorCode::kInvalidFactoradic,
                     "the weight-0! digit must be 0");
  }
  const std::size_t top = digits.size() - 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] > top - i) {
      throw CodecError(ErrorCode::kInvalidFactoradic,
                       "digit " + std::to_string(digits[i]) +
                           " exceeds its position " + std::to_string(top - i));
    }
  }
  // Horner over the mixed radix: acc = (...(d_top * top + d_{top-1}) ...).
  Nat acc;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::size_t weight = top - i;
    acc += Nat(digits[i]);
    if (weight > 0) acc *= Nat(weight);
  }
  return acc;
}

Nat FactAscValue(std::span<const std::size_t> digits) {
  FactDigits desc(digits.rbegin(), digits.rend());
  return FactDescValue(desc);
}

}  // namespace hfrank
