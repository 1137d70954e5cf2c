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

#include "hfrank/natbits.hpp"

#include <algorithm>
#include <string>

#include "hfrank/error.hpp"

namespace hfrank {
namespace {

void CheckRadix(const Nat& base) {
  if (base < Nat(2)) {
    throw CodecError(ErrorCode::kInvalidRadix,
                     "base must be at least 2, got " + base.ToString());
  }
}

// log2(base) when base is a power of two, otherwise 0.
std::size_t PowerOfTwoExponent(const Nat& base) {
  const std::size_t tz = base.TrailingZeros();
  return base.BitLength() == tz + 1 ? tz : 0;
}

}  // namespace

DigitList BaseDigits(const Nat& base, const Nat& n) {
  CheckRadix(base);
  if (n < base) return {n};

  DigitList digits;
  if (const std::size_t width = PowerOfTwoExponent(base); width != 0) {
    const std::size_t bits = n.BitLength();
    digits.reserve((bits + width - 1) / width);
    for (std::size_t lo = 0; lo < bits; lo += width) {
      Nat d;
      for (std::size_t j = 0; j < width; ++j) {
        if (n.TestBit(lo + j)) d.SetBit(j);
      }
      digits.push_back(std::move(d));
    }
    return digits;
  }

  Nat rest = n;
  while (!rest.IsZero()) {
    digits.push_back(rest % base);
    rest /= base;
  }
  return digits;
}

Nat DigitsValue(const Nat& base, std::span<const Nat> digits) {
  CheckRadix(base);
  Nat acc;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= base) {
      throw CodecError(ErrorCode::kInvalidDigit,
                       "digit " + it->ToString() + " out of range for base " +
                           base.ToString());
    }
    acc *= base;
    acc += *it;
  }
  return acc;
}

BitList BitsOf(const Nat& n) {
  if (n.IsZero()) return {0};
  const std::size_t len = n.BitLength();
  BitList bits(len);
  for (std::size_t i = 0; i < len; ++i) bits[i] = n.TestBit(i) ? 1 : 0;
  return bits;
}

Nat BitsValue(std::span<const std::uint8_t> bits) {
  Nat n;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      throw CodecError(ErrorCode::kInvalidDigit,
                       "bit list element " + std::to_string(bits[i]) +
                           " at position " + std::to_string(i));
    }
    if (bits[i] == 1) n.SetBit(i);
  }
  return n;
}

std::size_t BitCount(const Nat& n) { return std::max<std::size_t>(1, n.BitLength()); }

std::size_t MaxBitCount(std::span<const Nat> ns) {
  if (ns.empty()) {
    throw CodecError(ErrorCode::kEmptyInput, "max bit count of nothing");
  }
  std::size_t best = 0;
  for (const Nat& n : ns) best = std::max(best, BitCount(n));
  return best;
}

BitList PaddedBits(std::size_t width, const Nat& n) {
  BitList bits = BitsOf(n);
  if (bits.size() > width) {
    throw CodecError(ErrorCode::kOverflow,
                     n.ToString() + " needs " + std::to_string(bits.size()) +
                         " bits, width is " + std::to_string(width));
  }
  bits.resize(width, 0);
  return bits;
}

BitMatrix Transpose(const BitMatrix& m) {
  if (m.empty() || m.front().empty()) {
    throw CodecError(ErrorCode::kShape, "cannot transpose an empty matrix");
  }
  const std::size_t cols = m.front().size();
  for (const BitList& row : m) {
    if (row.size() != cols) {
      throw CodecError(ErrorCode::kShape, "ragged bit matrix");
    }
  }
  BitMatrix t(cols, BitList(m.size()));
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t i = 0; i < cols; ++i) t[i][j] = m[j][i];
  }
  return t;
}

}  // namespace hfrank
