// Copyright 2026 The derivkey Authors
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

#include "derivkey/rational.h"

#include <cctype>
#include <limits>

#include "derivkey/error.h"

namespace derivkey {
namespace {

__int128 Gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = Reduce(num, den);
}

Rational Rational::Reduce(__int128 num, __int128 den) {
  if (den == 0) Fail(ErrorCode::kInvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!FitsInt64(num) || !FitsInt64(den)) {
    Fail(ErrorCode::kOverflow, "rational coefficient exceeds 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::FromLiteral(std::string_view literal) {
  auto bad = [&]() {
    Fail(ErrorCode::kSyntax, "malformed number '" + std::string(literal) + "'");
  };
  if (literal.empty()) bad();
  __int128 num = 0;
  __int128 den = 1;
  std::size_t i = 0;
  auto read_digits = [&](__int128& acc, __int128* scale) {
    std::size_t start = i;
    while (i < literal.size() && std::isdigit(static_cast<unsigned char>(literal[i]))) {
      acc = acc * 10 + (literal[i] - '0');
      if (scale != nullptr) *scale *= 10;
      if (acc > std::numeric_limits<std::int64_t>::max() ||
          (scale != nullptr && *scale > std::numeric_limits<std::int64_t>::max())) {
        Fail(ErrorCode::kOverflow, "number literal too large: " + std::string(literal));
      }
      ++i;
    }
    if (i == start) bad();
  };
  read_digits(num, nullptr);
  if (i == literal.size()) return Reduce(num, den);
  if (literal[i] == '.') {
    ++i;
    read_digits(num, &den);
  } else if (literal[i] == '/') {
    ++i;
    den = 0;
    read_digits(den, nullptr);
    if (den == 0) Fail(ErrorCode::kSyntax, "zero denominator in '" + std::string(literal) + "'");
  } else {
    bad();
  }
  if (i != literal.size()) bad();
  return Reduce(num, den);
}

double Rational::ToDouble() const {
  // Both parts are exact below 2^53, so the quotient is correctly rounded.
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) {
    Fail(ErrorCode::kOverflow, "rational negation overflow");
  }
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    return Rational::Reduce(static_cast<__int128>(a.num_) + b.num_, a.den_);
  }
  __int128 g = Gcd(a.den_, b.den_);
  __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
  __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                 static_cast<__int128>(b.num_) * (a.den_ / g);
  return Rational::Reduce(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  __int128 g1 = Gcd(a.num_, b.den_);
  __int128 g2 = Gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  __int128 num = (a.num_ / g1) * (b.num_ / g2);
  __int128 den = (a.den_ / g2) * (b.den_ / g1);
  return Rational::Reduce(num, den);
}

}  // namespace derivkey
