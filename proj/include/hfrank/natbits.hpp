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

// Radix conversion and bit-list helpers. All digit and bit sequences are
// least significant first: element i is the coefficient of base^i.

#ifndef HFRANK_NATBITS_HPP_
#define HFRANK_NATBITS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hfrank/nat.hpp"

namespace hfrank {

using DigitList = std::vector<Nat>;
using BitList = std::vector<std::uint8_t>;
using BitMatrix = std::vector<BitList>;

// Digits of `n` in `base`. Zero yields {0}; otherwise the last digit is
// nonzero. Throws kInvalidRadix when base < 2.
DigitList BaseDigits(const Nat& base, const Nat& n);

// Sum of digits[i] * base^i. Throws kInvalidRadix when base < 2 and
// kInvalidDigit when some digit >= base.
Nat DigitsValue(const Nat& base, std::span<const Nat> digits);

// Base-2 specializations. BitsOf(0) is {0}, as with BaseDigits(2, 0).
BitList BitsOf(const Nat& n);
Nat BitsValue(std::span<const std::uint8_t> bits);

// Number of binary digits, except that both 0 and 1 count as one digit.
std::size_t BitCount(const Nat& n);

// Throws kEmptyInput on an empty sequence.
std::size_t MaxBitCount(std::span<const Nat> ns);

// BitsOf(n) extended with zeros at the top to exactly `width` positions.
// Throws kOverflow when BitsOf(n) is already longer than `width`.
BitList PaddedBits(std::size_t width, const Nat& n);

// result[i][j] = m[j][i]. Throws kShape on an empty or ragged matrix.
BitMatrix Transpose(const BitMatrix& m);

}  // namespace hfrank

#endif  // HFRANK_NATBITS_HPP_
