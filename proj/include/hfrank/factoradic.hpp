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

#ifndef HFRANK_FACTORADIC_HPP_
#define HFRANK_FACTORADIC_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hfrank/nat.hpp"

namespace hfrank {

// Factorial-base digits. Digit i has weight i! and is at most i, so a digit
// always fits a machine word.
using FactDigits = std::vector<std::size_t>;

// Ascending significance: {0} for zero, first digit always 0.
FactDigits ToFactAsc(const Nat& n);
// Descending significance: the reverse of ToFactAsc.
FactDigits ToFactDesc(const Nat& n);

// Value of a descending digit string, positions counted from the end.
// Leading zeros are allowed. Throws kInvalidFactoradic when the input is
// empty, its last digit is nonzero, or a digit exceeds its position.
Nat FactDescValue(std::span<const std::size_t> digits);
// Same contract for ascending strings.
Nat FactAscValue(std::span<const std::size_t> digits);

}  // namespace hfrank

#endif  // HFRANK_FACTORADIC_HPP_
