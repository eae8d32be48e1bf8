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

#include "bimatrix/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bimatrix {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional leading '-', then digits only.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !all_digits(den)) return std::nullopt;
    BigInt q(std::string(den), 10);
    if (q == 0) return std::nullopt;
    return Rational(BigInt(std::string(num), 10), q);
  }
  bool negative = !text.empty() && text.front() == '-';
  std::string_view body = negative ? text.substr(1) : text;
  std::string digits;
  std::size_t frac_len = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ipart = body.substr(0, dot);
    std::string_view fpart = body.substr(dot + 1);
    if (!all_digits(ipart) || !all_digits(fpart)) return std::nullopt;
    digits = std::string(ipart) + std::string(fpart);
    frac_len = fpart.size();
  } else {
    if (!all_digits(body)) return std::nullopt;
    digits = std::string(body);
  }
  BigInt num(digits, 10);
  if (negative) num = -num;
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace bimatrix
