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

#ifndef HFRANK_NAT_HPP_
#define HFRANK_NAT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace hfrank {

// Arbitrary-precision natural number. The value is never negative:
// subtraction that would underflow throws std::underflow_error.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  // Accepts decimal digits, or hexadecimal with a "0x"/"0X" prefix.
  // Throws CodecError(kParse) on anything else.
  static Nat Parse(std::string_view text);

  // Radix is 2..62 as supported by GMP; hex output carries no prefix.
  std::string ToString(int radix = 10) const;

  bool IsZero() const { return sgn(v_) == 0; }
  bool IsOdd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

  // Number of significant bits; 0 for zero.
  std::size_t BitLength() const;
  bool TestBit(std::size_t i) const;
  // SetBit, << and PowerOfTwo throw kOverflow past kMaxBits.
  void SetBit(std::size_t i);
  // Index of the lowest set bit. Precondition: nonzero.
  std::size_t TrailingZeros() const;
  // Index of the lowest set/clear bit at or after `from`.
  std::size_t ScanOne(std::size_t from) const;
  std::size_t ScanZero(std::size_t from) const;

  std::optional<std::uint64_t> ToU64() const;
  // Checked narrowing; throws CodecError(kOverflow) when too large.
  std::size_t ToSize() const;

  // Divides in place by a nonzero machine word and returns the remainder.
  std::uint64_t DivRemSmall(std::uint64_t divisor);

  Nat& operator+=(const Nat& o);
  Nat& operator-=(const Nat& o);
  Nat& operator*=(const Nat& o);
  Nat& operator/=(const Nat& o);
  Nat& operator%=(const Nat& o);
  Nat& operator<<=(std::size_t s);
  Nat& operator>>=(std::size_t s);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
  friend Nat operator%(Nat a, const Nat& b) { return a %= b; }
  friend Nat operator<<(Nat a, std::size_t s) { return a <<= s; }
  friend Nat operator>>(Nat a, std::size_t s) { return a >>= s; }

  friend bool operator==(const Nat& a, const Nat& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  static constexpr std::size_t kMaxBits = std::size_t{1} << 32;

  static Nat PowerOfTwo(std::size_t exponent);

  const mpz_class& raw() const { return v_; }

 private:
  explicit Nat(mpz_class v) : v_(std::move(v)) {}

  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

}  // namespace hfrank

#endif  // HFRANK_NAT_HPP_
