#include <vector>

#include "doctest.h"
#include "dring/error.hpp"
#include "dring/field.hpp"
#include "dring/upoly.hpp"

using namespace dring;

TEST_CASE("rational arithmetic stays in lowest terms") {
  auto Q = Field::rationals();
  auto a = FieldElement::from_rational(Q, Rational(2, 4));
  auto b = FieldElement::from_rational(Q, Rational(1, 3));
  CHECK((a + b).rational() == Rational(5, 6));
  CHECK((a * b).rational() == Rational(1, 6));
  CHECK((a - a).is_zero());
  CHECK((a / b).rational() == Rational(3, 2));
  CHECK(a.str() == "1/2");
  CHECK((FieldElement::from_long(Q, -3)).str() == "-3");
}

TEST_CASE("prime field arithmetic and inverses") {
  auto F5 = Field::prime(5);
  auto two = FieldElement::from_long(F5, 2);
  auto three = FieldElement::from_long(F5, 3);
  CHECK((two + three).is_zero());
  CHECK((two * three).residue() == 1);
  CHECK(two.inverse().residue() == 3);
  CHECK(FieldElement::from_long(F5, -1).residue() == 4);
  CHECK_THROWS_AS(FieldElement::zero(F5).inverse(), InputError);
  CHECK_THROWS_AS(Field::prime(6), InputError);
}

TEST_CASE("number field Q(s) with s^2 = 2") {
  auto K = Field::number_field({Rational(-2), Rational(0), Rational(1)}, "s");
  auto s = FieldElement::generator(K);
  CHECK((s * s).rational() == Rational(2));
  auto u = s + FieldElement::from_long(K, 1);
  auto inv = u.inverse();
  CHECK((u * inv).is_one());
  // (1+s)^{-1} = s - 1 since (s+1)(s-1) = 1.
  CHECK(inv == s - FieldElement::one(K));
  CHECK(u.str() == "1 + s");
  CHECK((s * s * s).str() == "2*s");
}

TEST_CASE("number field rejects reducible modulus on inversion") {
  // x^2 - 1 = (x-1)(x+1) is not irreducible; inverting x-1 hits a zero
  // divisor.
  auto K = Field::number_field({Rational(-1), Rational(0), Rational(1)}, "t");
  auto bad = FieldElement::generator(K) - FieldElement::one(K);
  CHECK_THROWS_AS(bad.inverse(), InputError);
}

TEST_CASE("univariate factorization over Q") {
  // x^3 - 2x = x (x^2 - 2)
  UPolyQ f = {Rational(0), Rational(-2), Rational(0), Rational(1)};
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 2);
  bool saw_linear = false, saw_quad = false;
  for (const auto& qf : factors) {
    CHECK(qf.multiplicity == 1);
    if (updeg(qf.factor) == 1) {
      saw_linear = true;
      CHECK(qf.factor == UPolyQ{Rational(0), Rational(1)});
    }
    if (updeg(qf.factor) == 2) {
      saw_quad = true;
      CHECK(qf.factor == UPolyQ{Rational(-2), Rational(0), Rational(1)});
    }
  }
  CHECK(saw_linear);
  CHECK(saw_quad);
}

TEST_CASE("factorization handles repeated and non-monic input") {
  // 4x^2 + 4x + 1 = (2x+1)^2 -> monic factor (x + 1/2)^2
  UPolyQ f = {Rational(1), Rational(4), Rational(4)};
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].multiplicity == 2);
  CHECK(factors[0].factor == UPolyQ{Rational(1, 2), Rational(1)});
}

TEST_CASE("factorization of an irreducible quartic") {
  // x^4 + 1 is irreducible over Q.
  UPolyQ f = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)};
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].multiplicity == 1);
  CHECK(updeg(factors[0].factor) == 4);
}

TEST_CASE("factorization splits x^4 - 5x^2 + 6") {
  // (x^2 - 2)(x^2 - 3)
  UPolyQ f = {Rational(6), Rational(0), Rational(-5), Rational(0),
              Rational(1)};
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 2);
  CHECK(updeg(factors[0].factor) == 2);
  CHECK(updeg(factors[1].factor) == 2);
}

TEST_CASE("gf(p) factorization via distinct roots") {
  // x^2 + 1 over F_5 = (x+2)(x+3)
  UPolyP f = {1, 0, 1};
  auto factors = factor_mod_p(f, 5);
  REQUIRE(factors.size() == 2);
}
