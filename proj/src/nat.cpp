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

#include "hfrank/nat.hpp"

#include <limits>
#include <stdexcept>

#include "hfrank/error.hpp"

namespace hfrank {
namespace {

// GMP aborts the process rather than report an oversized result, so refuse
// anything past 2^32 bits up front.
void CheckBitLength(std::size_t bits) {
  if (bits > Nat::kMaxBits) {
    throw CodecError(ErrorCode::kOverflow,
                     "result needs " + std::to_string(bits) + " bits, limit is " +
                         std::to_string(Nat::kMaxBits));
  }
}

}  // namespace

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "Nat assumes an LP64 data model");

Nat::Nat(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}

Nat Nat::Parse(std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.size() > 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  if (digits.empty()) {
    throw CodecError(ErrorCode::kParse, "empty number");
  }
  for (char c : digits) {
    const bool ok = base == 10 ? (c >= '0' && c <= '9')
                               : ((c >= '0' && c <= '9') ||
                                  (c >= 'a' && c <= 'f') ||
                                  (c >= 'A' && c <= 'F'));
    if (!ok) {
      throw CodecError(ErrorCode::kParse,
                       "not a natural number: '" + std::string(text) + "'");
    }
  }
  mpz_class v;
  v.set_str(std::string(digits), base);
  return Nat(std::move(v));
}

std::string Nat::ToString(int radix) const { return v_.get_str(radix); }

std::size_t Nat::BitLength() const {
  return IsZero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

bool Nat::TestBit(std::size_t i) const {
  return mpz_tstbit(v_.get_mpz_t(), i) != 0;
}

void Nat::SetBit(std::size_t i) {
  CheckBitLength(i + 1);
  mpz_setbit(v_.get_mpz_t(), i);
}

std::size_t Nat::TrailingZeros() const { return ScanOne(0); }

std::size_t Nat::ScanOne(std::size_t from) const {
  return mpz_scan1(v_.get_mpz_t(), from);
}

std::size_t Nat::ScanZero(std::size_t from) const {
  return mpz_scan0(v_.get_mpz_t(), from);
}

std::optional<std::uint64_t> Nat::ToU64() const {
  if (!v_.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(v_.get_ui());
}

std::size_t Nat::ToSize() const {
  const auto v = ToU64();
  if (!v || *v > std::numeric_limits<std::size_t>::max()) {
    throw CodecError(ErrorCode::kOverflow,
                     "value does not fit a machine word: " + ToString());
  }
  return static_cast<std::size_t>(*v);
}

std::uint64_t Nat::DivRemSmall(std::uint64_t divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  return mpz_tdiv_q_ui(v_.get_mpz_t(), v_.get_mpz_t(), divisor);
}

Nat& Nat::operator+=(const Nat& o) {
  v_ += o.v_;
  return *this;
}

Nat& Nat::operator-=(const Nat& o) {
  if (cmp(v_, o.v_) < 0) {
    throw std::underflow_error("natural subtraction below zero");
  }
  v_ -= o.v_;
  return *this;
}

Nat& Nat::operator*=(const Nat& o) {
  v_ *= o.v_;
  return *this;
}

Nat& Nat::operator/=(const Nat& o) {
  if (o.IsZero()) throw std::domain_error("division by zero");
  mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Nat& Nat::operator%=(const Nat& o) {
  if (o.IsZero()) throw std::domain_error("division by zero");
  mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Nat& Nat::operator<<=(std::size_t s) {
  if (!IsZero()) CheckBitLength(BitLength() + s);
  mpz_mul_2exp(v_.get_mpz_t(), v_.get_mpz_t(), s);
  return *this;
}

Nat& Nat::operator>>=(std::size_t s) {
  mpz_tdiv_q_2exp(v_.get_mpz_t(), v_.get_mpz_t(), s);
  return *this;
}

Nat Nat::PowerOfTwo(std::size_t exponent) {
  Nat r;
  r.SetBit(exponent);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) {
  return os << n.ToString();
}

}  // namespace hfrank
