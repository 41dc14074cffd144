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

#ifndef INTSEL_RATIONAL_H_
#define INTSEL_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace intsel {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator both fit in an int64 are stored
// inline and handled with 128-bit intermediate arithmetic; anything larger is
// promoted to a shared, immutable GMP rational. The representation is
// canonical: a value is stored inline iff it fits, so equality never has to
// look across representations.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int64_t numerator, int64_t denominator);

  // Parses "n/d" or "n" (decimal, optional leading '-'). Throws
  // std::invalid_argument on malformed text or a zero denominator.
  static Rational Parse(std::string_view text);

  bool is_small() const { return big_ == nullptr; }
  int sign() const;

  // Decimal "n/d"; the denominator is always printed, even when it is 1.
  std::string ToString() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  // Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

  // Exposed for the slow path and for tests that cross-check against GMP.
  mpq_class ToMpq() const;
  static Rational FromMpq(mpq_class value);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace intsel

#endif  // INTSEL_RATIONAL_H_
