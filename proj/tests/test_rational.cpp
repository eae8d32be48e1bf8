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

#include <stdexcept>

#include "doctest.h"
#include "support.hpp"

using bimatrix::BigInt;
using bimatrix::Rational;

TEST_CASE("rationals are always reduced with a positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("string forms parse exactly") {
  CHECK(*Rational::parse("0.49") == Rational(49, 100));
  CHECK(*Rational::parse("2.5") == Rational(5, 2));
  CHECK(*Rational::parse("-0.49") == Rational(-49, 100));
  CHECK(*Rational::parse("-3") == Rational(-3));
  CHECK(*Rational::parse("7/21") == Rational(1, 3));
  CHECK(*Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(*Rational::parse("0.490") == Rational(49, 100));
  CHECK(*Rational::parse("123456789012345678901234567890") ==
        Rational(BigInt("123456789012345678901234567890"), BigInt(1)));

  CHECK_FALSE(Rational::parse(""));
  CHECK_FALSE(Rational::parse("1/0"));
  CHECK_FALSE(Rational::parse("1/-2"));
  CHECK_FALSE(Rational::parse("1e5"));
  CHECK_FALSE(Rational::parse("1.2.3"));
  CHECK_FALSE(Rational::parse("0.333..."));
  CHECK_FALSE(Rational::parse("+1"));
  CHECK_FALSE(Rational::parse(".5"));
  CHECK_FALSE(Rational::parse("2."));
  CHECK_FALSE(Rational::parse("1 / 2"));
}

TEST_CASE("serialization uses p/q or a plain integer") {
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-5, 10).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(49, 100) * Rational(3) + Rational(51, 100) * Rational(2) == Rational(249, 100));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) < Rational(0));
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("arithmetic keeps results canonical on random inputs") {
  bimatrix::testing::TestRng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(rng.uniform(-50, 50), rng.uniform(1, 30));
    Rational b(rng.uniform(-50, 50), rng.uniform(1, 30));
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(r.denominator() > 0);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      CHECK(g == 1);
    }
  }
}
