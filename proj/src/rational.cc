// Copyright 2026 The intsel Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "intsel/rational.h"

#include <limits>
#include <stdexcept>

namespace intsel {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();
constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

u128 Abs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : v; }

u128 Gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Inline values exclude INT64_MIN so that negation never overflows.
bool FitsInline(i128 v) { return v > kMin && v <= kMax; }

mpz_class MpzFrom(i128 v) {
  const bool negative = v < 0;
  u128 mag = Abs(v);
  uint64_t words[2] = {static_cast<uint64_t>(mag),
                       static_cast<uint64_t>(mag >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, words);
  if (negative) out = -out;
  return out;
}

bool FitsInline(const mpz_class& v) {
  return mpz_fits_slong_p(v.get_mpz_t()) && v != mpz_class(kMin);
}

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(int64_t value) {
  if (value == kMin) {
    big_ = std::make_shared<const mpq_class>(mpz_class(MpzFrom(value)));
    return;
  }
  num_ = value;
}

Rational::Rational(int64_t numerator, int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = Gcd(Abs(n), Abs(d));
  n /= static_cast<i128>(g);
  d /= static_cast<i128>(g);
  if (FitsInline(n) && FitsInline(d)) {
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
  } else {
    *this = FromMpq(mpq_class(MpzFrom(n), MpzFrom(d)));
  }
}

Rational Rational::FromMpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  if (FitsInline(value.get_num()) && FitsInline(value.get_den())) {
    r.num_ = value.get_num().get_si();
    r.den_ = value.get_den().get_si();
  } else {
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return r;
}

mpq_class Rational::ToMpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

Rational Rational::Parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!IsDigits(digits) || !IsDigits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  return FromMpq(mpq_class(n, d));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::ToString() const {
  if (big_) {
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return FromMpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

namespace {

Rational FromWide(i128 n, i128 d) {
  // d > 0 here; both magnitudes are below 2^127.
  u128 g = Gcd(Abs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (FitsInline(n) && FitsInline(d)) {
    return Rational(static_cast<int64_t>(n), static_cast<int64_t>(d));
  }
  return Rational::FromMpq(mpq_class(MpzFrom(n), MpzFrom(d)));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::FromMpq(a.ToMpq() + b.ToMpq());
  i128 n = static_cast<i128>(a.num_) * b.den_ +
           static_cast<i128>(b.num_) * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  return FromWide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::FromMpq(a.ToMpq() * b.ToMpq());
  return FromWide(static_cast<i128>(a.num_) * b.num_,
                  static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
  if (a.big_ || b.big_) return Rational::FromMpq(a.ToMpq() / b.ToMpq());
  i128 n = static_cast<i128>(a.num_) * b.den_;
  i128 d = static_cast<i128>(a.den_) * b.num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return FromWide(n, d);
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never equals an inline one
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    int c = cmp(a.ToMpq(), b.ToMpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace intsel
