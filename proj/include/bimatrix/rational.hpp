// Copyright 2026 The Bimatrix Authors
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

#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace bimatrix {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Payoffs, probabilities and all solver arithmetic use
/// this type exclusively; there is no floating point anywhere in the library.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit so payoff tables read naturally
  Rational(int n) : value_(static_cast<long>(n)) {}  // NOLINT
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts an integer string ("-3"), a fraction "p/q" with q > 0, or a
  /// finite decimal "x.yz" (converted exactly, e.g. "0.49" -> 49/100).
  /// Returns nullopt on anything else; exponents and repeating decimals are
  /// not representable and therefore rejected.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// Reduced "p/q" form; plain "p" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);

}  // namespace bimatrix
