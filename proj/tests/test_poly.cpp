#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "dring/error.hpp"
#include "dring/parser.hpp"
#include "dring/poly.hpp"
#include "dring/ratfun.hpp"

using namespace dring;

namespace {

RingPtr qring(std::vector<std::string> vars) {
  return make_ring(Field::rationals(), std::move(vars));
}

MultiPoly rand_poly(const RingPtr& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), expo(0, 2), coef(-4, 4);
  MultiPoly p(ring);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Expo e(ring->vars.size(), 0);
    for (auto& x : e) x = static_cast<unsigned>(expo(rng));
    long c = coef(rng);
    if (c == 0) continue;
    p = p + MultiPoly::monomial(ring, e, FieldElement::from_long(ring->field, c));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial degree, derivative, and printing") {
  auto R = qring({"x", "y"});
  auto p = parse_polynomial(R, "y - x^2");
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.str() == "-x^2 + y");
  CHECK(p.derivative(0).str() == "-2*x");
  CHECK(p.derivative(1).str() == "1");
  auto q = parse_polynomial(R, "(x+1)^2 - x^2 - 2*x - 1");
  CHECK(q.is_zero());
}

TEST_CASE("parser handles rationals, unary minus, and errors") {
  auto R = qring({"x", "y"});
  CHECK(parse_polynomial(R, "1/2*x + 1/2*x").str() == "x");
  CHECK(parse_polynomial(R, "-x + 3").str() == "-x + 3");
  CHECK(parse_expression(R, "x/y").str() == "x/y");
  CHECK_THROWS_AS(parse_polynomial(R, "x/y"), InputError);
  CHECK_THROWS_AS(parse_expression(R, "x + "), ParseError);
  CHECK_THROWS_AS(parse_expression(R, "q + 1"), ParseError);
  CHECK_THROWS_AS(parse_expression(R, "x^y"), ParseError);
  CHECK_THROWS_AS(parse_expression(R, "1/0"), ParseError);
  CHECK_THROWS_AS(parse_expression(R, "(x"), ParseError);
  try {
    parse_expression(R, "x + @");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("parser over F_2 folds coefficients") {
  auto R = make_ring(Field::prime(2), {"x1", "x2"});
  auto p = parse_polynomial(R, "x1 + x2/1");
  CHECK(p == parse_polynomial(R, "x1 + x2"));
  CHECK(parse_polynomial(R, "x1 + x1").is_zero());
}

TEST_CASE("print/parse round trip on generated expressions") {
  auto R = qring({"x", "y", "z"});
  std::mt19937 rng(20260822);
  int nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = rand_poly(R, rng);
    MultiPoly q = parse_polynomial(R, p.str());
    CHECK(p == q);
    if (!p.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 150);
}

TEST_CASE("ring laws on random triples") {
  auto R = qring({"x", "y", "z"});
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    MultiPoly f = rand_poly(R, rng), g = rand_poly(R, rng),
              h = rand_poly(R, rng);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK(f * (g * h) == (f * g) * h);
  }
}

TEST_CASE("coefficient extraction and evaluation") {
  auto R = qring({"x", "y"});
  auto p = parse_polynomial(R, "x^2*y + 2*x*y + y^2 + 7");
  CHECK(p.coeff_of(0, 1).str() == "2*y");
  CHECK(p.coeff_of(0, 2).str() == "y");
  CHECK(p.coeff_of(0, 0).str() == "y^2 + 7");
  auto F = Field::rationals();
  std::function<FieldElement(const FieldElement&)> id =
      [](const FieldElement& c) { return c; };
  auto val = p.evaluate<FieldElement>(
      {FieldElement::from_long(F, 2), FieldElement::from_long(F, 3)}, id);
  // 4*3 + 2*2*3 + 9 + 7 = 40
  CHECK(val.rational() == Rational(40));
}

TEST_CASE("multivariate gcd and exact division") {
  auto R = qring({"x", "y"});
  auto a = parse_polynomial(R, "(x+y)^2 * (x - y)");
  auto b = parse_polynomial(R, "(x+y) * (x + 2*y)");
  auto g = poly_gcd(a, b);
  CHECK(g == parse_polynomial(R, "x + y"));
  CHECK(poly_exact_div(a, g) == parse_polynomial(R, "(x+y)*(x-y)"));
  CHECK_THROWS_AS(poly_exact_div(b, parse_polynomial(R, "x")), InputError);
  // gcd of coprime polynomials is 1
  CHECK(poly_gcd(parse_polynomial(R, "x^2 + 1"), parse_polynomial(R, "y"))
            .is_constant());
}

TEST_CASE("rational function normalization") {
  auto R = qring({"x", "y"});
  auto f = parse_expression(R, "(x^2 - y^2) / (x + y)");
  CHECK(f.is_polynomial());
  CHECK(f.as_polynomial() == parse_polynomial(R, "x - y"));
  auto g = parse_expression(R, "(2*x) / (4*y)");
  CHECK(g.num().str() == "1/2*x");
  CHECK(g.den().str() == "y");
  CHECK(parse_expression(R, g.str()) == g);
  auto h = parse_expression(R, "1/(x*y) + 1/(x*y)");
  CHECK(h == parse_expression(R, "2/(x*y)"));
}

TEST_CASE("rational function field laws") {
  auto R = qring({"x", "y"});
  std::mt19937 rng(11);
  for (int i = 0; i < 25; ++i) {
    MultiPoly a = rand_poly(R, rng), b = rand_poly(R, rng),
              c = rand_poly(R, rng), d = rand_poly(R, rng);
    if (b.is_zero() || d.is_zero()) continue;
    RationalFunction f(a, b), g(c, d);
    CHECK(f + g - g == f);
    if (!g.is_zero()) CHECK(f * g / g == f);
  }
}

TEST_CASE("rational function derivative uses the quotient rule") {
  auto R = qring({"x"});
  auto f = parse_expression(R, "1/x");
  CHECK(f.derivative(0) == parse_expression(R, "-1/x^2"));
  auto g = parse_expression(R, "x^2/(x+1)");
  CHECK(g.derivative(0) == parse_expression(R, "(x^2 + 2*x)/(x^2 + 2*x + 1)"));
}

TEST_CASE("number field coefficients print with parentheses") {
  auto K = Field::number_field({Rational(-2), Rational(0), Rational(1)}, "s");
  auto R = make_ring(K, {"x"});
  auto p = parse_polynomial(R, "s*x + s + 1");
  CHECK(p.str() == "(s)*x + (1 + s)");
  CHECK(parse_polynomial(R, p.str()) == p);
}
