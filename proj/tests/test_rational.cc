// test_rational.cc
//
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

#include <random>

#include "doctest.h"
#include "linrep/rational.hh"

using namespace linrep;

namespace {

bool canonical(const Rational& r) {
  const Integer num = r.numerator();
  const Integer den = r.denominator();
  if (sgn(den) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return g == 1 || (sgn(num) == 0 && den == 1);
}

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("construction canonicalises") {
  CHECK(Rational(Integer(2), Integer(4)) == Rational(Integer(1), Integer(2)));
  CHECK(Rational(Integer(2), Integer(4)).str() == "1/2");
  CHECK(Rational(Integer(3), Integer(-6)).str() == "-1/2");
  CHECK(Rational(Integer(0), Integer(7)).str() == "0");
  CHECK(Rational(Integer(0), Integer(7)).denominator() == 1);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_WITH_AS(Rational(Integer(1), Integer(0)), "zero denominator",
                       std::invalid_argument);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("equality is exact") {
  CHECK(Rational(Integer(10), Integer(20)) == Rational(Integer(-1), Integer(-2)));
  CHECK(Rational(Integer(1), Integer(3)) != Rational(Integer(333333), Integer(1000000)));
  CHECK(Rational(1) / Rational(3) * Rational(3) == Rational(1));
}

TEST_CASE("ordering") {
  CHECK(Rational(Integer(-1), Integer(2)) < Rational(Integer(1), Integer(3)));
  CHECK(Rational(2) > Rational(Integer(3), Integer(2)));
}

TEST_CASE("parsing and formatting") {
  CHECK(Rational::from_string("-3").str() == "-3");
  CHECK(Rational::from_string("5/7").str() == "5/7");
  CHECK(Rational::from_string("2/4").str() == "1/2");
  CHECK(Rational::from_string("5/1").str() == "5");
  CHECK(Rational::from_string("-0").str() == "0");

  for (const char* bad : {"", "-", "1/", "/2", "1/-2", "+1", "1.5", "a", "1/2/3", "1 /2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::from_string(bad), std::invalid_argument);
  }
  CHECK_THROWS_WITH_AS(Rational::from_string("3/0"), "zero denominator",
                       std::invalid_argument);
}

TEST_CASE("arithmetic keeps canonical form") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 30);
  Rational acc(1);
  for (int i = 0; i < 500; ++i) {
    const Rational r(Integer(num(rng)), Integer(den(rng)));
    const Rational s(Integer(num(rng)), Integer(den(rng)));
    CHECK(canonical(r + s));
    CHECK(canonical(r - s));
    CHECK(canonical(r * s));
    if (!s.is_zero()) CHECK(canonical(r / s));
    acc += r * s;
    CHECK(canonical(acc));
  }
}

TEST_CASE("field identities on random values") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  for (int i = 0; i < 200; ++i) {
    const Rational a(Integer(num(rng)), Integer(den(rng)));
    const Rational b(Integer(num(rng)), Integer(den(rng)));
    const Rational c(Integer(num(rng)), Integer(den(rng)));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

}  // TEST_SUITE
