#include <string>
#include <vector>

#include "doctest.h"
#include "dring/algebra.hpp"
#include "dring/parser.hpp"
#include "dring/poly.hpp"

using namespace dring;

namespace {

FieldElement fe(const FieldPtr& f, long n) {
  return FieldElement::from_long(f, n);
}

std::vector<FieldElement> vec(const FieldPtr& f, std::vector<long> v) {
  std::vector<FieldElement> out;
  for (long n : v) out.push_back(fe(f, n));
  return out;
}

}  // namespace

TEST_CASE("structure constants are stored symmetrically") {
  FieldPtr q = Field::rationals();
  AlgebraScheme dual = dual_numbers_scheme(q);
  CHECK(dual.a(0, 1, 1) == fe(q, 1));
  CHECK(dual.a(1, 0, 1) == fe(q, 1));
  CHECK(dual.a(1, 1, 1).is_zero());
  CHECK(dual.a(1, 1, 0).is_zero());
  CHECK_THROWS_AS(dual.set_a(0, 1, 1, fe(q, 2)), InputError);
  CHECK_THROWS_AS(dual.set_a(0, 0, 2, fe(q, 1)), InputError);
}

TEST_CASE("multiplication matches hand computations") {
  FieldPtr q = Field::rationals();

  SUBCASE("dual numbers") {
    AlgebraScheme s = dual_numbers_scheme(q);
    auto p = multiply_elements(s, vec(q, {3, 4}), vec(q, {2, 5}));
    CHECK(p == vec(q, {6, 23}));
  }

  SUBCASE("pair") {
    AlgebraScheme s = pair_scheme(q);
    auto p = multiply_elements(s, vec(q, {3, 4}), vec(q, {2, 5}));
    CHECK(p == vec(q, {6, 20}));
  }

  SUBCASE("length-2 truncation") {
    AlgebraScheme s = truncation_scheme(q, 2);
    auto p = multiply_elements(s, vec(q, {1, 1, 0}), vec(q, {1, 1, 0}));
    CHECK(p == vec(q, {1, 2, 1}));
    auto z = multiply_elements(s, vec(q, {0, 1, 0}), vec(q, {0, 0, 1}));
    CHECK(z == vec(q, {0, 0, 0}));
  }

  SUBCASE("twisted rank 2 over polynomial coordinates") {
    AlgebraScheme s = twisted_scheme(q, fe(q, 3));
    RingPtr ring = make_ring(q, {"x1", "y1", "x2", "y2"});
    auto embed = [&](const FieldElement& c) {
      return MultiPoly::constant(ring, c);
    };
    std::vector<MultiPoly> a{MultiPoly::variable(ring, 0),
                             MultiPoly::variable(ring, 1)};
    std::vector<MultiPoly> b{MultiPoly::variable(ring, 2),
                             MultiPoly::variable(ring, 3)};
    auto p = scheme_multiply(s, a, b, embed, MultiPoly::zero(ring));
    CHECK(p[0] == parse_polynomial(ring, "x1*x2"));
    CHECK(p[1] == parse_polynomial(ring, "x1*y2 + y1*x2 + 3*y1*y2"));
  }

  SUBCASE("coordinate length is checked") {
    AlgebraScheme s = pair_scheme(q);
    CHECK_THROWS_AS(multiply_elements(s, vec(q, {1}), vec(q, {1, 2})),
                    InputError);
  }
}

TEST_CASE("validation accepts the catalog") {
  FieldPtr q = Field::rationals();
  CHECK(validate_algebra(trivial_scheme(q)).empty());
  CHECK(validate_algebra(dual_numbers_scheme(q)).empty());
  CHECK(validate_algebra(truncation_scheme(q, 3)).empty());
  CHECK(validate_algebra(pair_scheme(q)).empty());
  CHECK(validate_algebra(twisted_scheme(q, fe(q, 3))).empty());
  CHECK(validate_algebra(twisted_endo_scheme(q)).empty());
  FieldPtr f5 = Field::prime(5);
  CHECK(validate_algebra(truncation_scheme(f5, 4)).empty());
}

TEST_CASE("validation reports each broken invariant") {
  FieldPtr q = Field::rationals();

  SUBCASE("projection stops being multiplicative") {
    AlgebraScheme s = dual_numbers_scheme(q);
    s.mul[{1, 1, 0}] = fe(q, 1);  // eta^2 = 1 makes pi(eta)^2 wrong
    auto report = validate_algebra(s);
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("(1,1)") != std::string::npos);
    CHECK(report[0].find("multiplicative") != std::string::npos);
  }

  SUBCASE("wrong unit") {
    AlgebraScheme s = pair_scheme(q);
    s.unit = vec(q, {1, 0});
    auto report = validate_algebra(s);
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("unit law") != std::string::npos);
    CHECK(report[0].find("1") != std::string::npos);
  }

  SUBCASE("zero algebra breaks several invariants at once") {
    AlgebraScheme s = make_scheme(q, {"a", "b"});
    auto report = validate_algebra(s);
    CHECK(report.size() >= 3);
  }

  SUBCASE("associativity violation is found") {
    // u^2 = w, uw = u, w^2 = 0: then (uu)w = 0 while u(uw) = w.
    AlgebraScheme s = make_scheme(q, {"1", "u", "w"});
    s.set_a(0, 0, 0, fe(q, 1));
    s.set_a(0, 1, 1, fe(q, 1));
    s.set_a(0, 2, 2, fe(q, 1));
    s.set_a(1, 1, 2, fe(q, 1));
    s.set_a(1, 2, 1, fe(q, 1));
    s.unit[0] = fe(q, 1);
    auto report = validate_algebra(s);
    bool mentions_assoc = false;
    for (const auto& line : report)
      if (line.find("associativity") != std::string::npos)
        mentions_assoc = true;
    CHECK(mentions_assoc);
  }
}

TEST_CASE("normalalization moves the projection to the first coordinate") {
  FieldPtr q = Field::rationals();

  SUBCASE("already normalized input is untouched") {
    AlgebraScheme dual = dual_numbers_scheme(q);
    auto [out, psi] = normalize_basis(dual);
    CHECK(same_structure(out, dual));
    CHECK(out.labels == dual.labels);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(psi[i][j] == (i == j ? fe(q, 1) : fe(q, 0)));
  }

  SUBCASE("endomorphism presented through the second projection") {
    // The same product of fields, but pi reads the coordinate in which the
    // basis rows are (1,0) and (0,1) summed: b0 = unit, b1 = -e0 + e1, and
    // b1^2 = -b1.
    AlgebraScheme s = twisted_scheme(q, fe(q, 1));
    s.pi = vec(q, {1, 1});
    CHECK(validate_algebra(s).empty());
    auto [out, psi] = normalize_basis(s);
    CHECK(validate_algebra(out).empty());
    CHECK(out.is_normalized());
    CHECK(psi[0] == vec(q, {1, 0}));
    CHECK(psi[1] == vec(q, {-1, 1}));
    CHECK(out.a(1, 1, 1) == fe(q, -1));
    CHECK(out.a(1, 1, 0).is_zero());
    CHECK(out.a(0, 1, 1) == fe(q, 1));
    CHECK(out.unit == vec(q, {1, 0}));

    auto [again, id2] = normalize_basis(out);
    CHECK(same_structure(again, out));
    CHECK(again.labels == out.labels);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(id2[i][j] == (i == j ? fe(q, 1) : fe(q, 0)));
  }

  SUBCASE("row permutation of the twisted endomorphism scheme") {
    AlgebraScheme s = make_scheme(q, {"(0,1)", "(1,0)", "(0,eta)"});
    s.set_a(0, 0, 0, fe(q, 1));
    s.set_a(1, 1, 1, fe(q, 1));
    s.set_a(0, 2, 2, fe(q, 1));
    s.unit = vec(q, {1, 1, 0});
    s.pi = vec(q, {0, 1, 0});
    CHECK(validate_algebra(s).empty());
    auto [out, psi] = normalize_basis(s);
    CHECK(psi[0] == vec(q, {1, 1, 0}));
    CHECK(psi[1] == vec(q, {1, 0, 0}));
    CHECK(psi[2] == vec(q, {0, 0, 1}));
    // Both presentations rebase onto the same canonical unit-first basis.
    auto [canon, psi2] = normalize_basis(twisted_endo_scheme(q));
    CHECK(same_structure(out, canon));
    CHECK(canon.a(1, 1, 1) == fe(q, 1));
    CHECK(canon.a(1, 2, 2) == fe(q, 1));
    CHECK(canon.a(0, 1, 1) == fe(q, 1));
    CHECK(canon.unit == vec(q, {1, 0, 0}));
  }

  SUBCASE("projection that is not a homomorphism is rejected") {
    AlgebraScheme s = pair_scheme(q);
    s.pi = vec(q, {1, 1});
    auto report = validate_algebra(s);
    CHECK(!report.empty());
    CHECK_THROWS_AS(normalize_basis(s), InputError);
  }
}

TEST_CASE("fibred product glues structures along the shared coordinate") {
  FieldPtr q = Field::rationals();
  AlgebraScheme s = fibred_product(pair_scheme(q), dual_numbers_scheme(q));
  CHECK(s.rank == 3);
  CHECK(validate_algebra(s).empty());
  CHECK(s.unit == vec(q, {1, 1, 0}));
  CHECK(s.a(0, 0, 0) == fe(q, 1));
  CHECK(s.a(1, 1, 1) == fe(q, 1));
  CHECK(s.a(0, 2, 2) == fe(q, 1));
  CHECK(s.a(0, 1, 1).is_zero());
  CHECK(s.a(1, 2, 2).is_zero());
  CHECK(s.a(2, 2, 2).is_zero());

  SUBCASE("the one-dimensional algebra is neutral") {
    AlgebraScheme t = trivial_scheme(q);
    CHECK(same_structure(fibred_product(dual_numbers_scheme(q), t),
                         dual_numbers_scheme(q)));
    CHECK(same_structure(fibred_product(t, pair_scheme(q)), pair_scheme(q)));
  }

  SUBCASE("factors must be normalized") {
    AlgebraScheme bad = twisted_scheme(q, fe(q, 1));
    bad.pi = vec(q, {1, 1});
    CHECK_THROWS_AS(fibred_product(bad, dual_numbers_scheme(q)), InputError);
  }

  SUBCASE("factors must share the field") {
    CHECK_THROWS_AS(
        fibred_product(pair_scheme(q), dual_numbers_scheme(Field::prime(5))),
        InputError);
  }
}

TEST_CASE("tensor product carries the twisted derivation rule") {
  FieldPtr q = Field::rationals();
  AlgebraScheme s = tensor_product(pair_scheme(q), dual_numbers_scheme(q));
  CHECK(s.rank == 4);
  CHECK(validate_algebra(s).empty());
  // Rows: 0 = (1,0)(x)1, 1 = (0,1)(x)1, 2 = (1,0)(x)eta, 3 = (0,1)(x)eta.
  CHECK(s.unit == vec(q, {1, 1, 0, 0}));
  CHECK(s.a(0, 0, 0) == fe(q, 1));
  CHECK(s.a(1, 1, 1) == fe(q, 1));
  CHECK(s.a(0, 2, 2) == fe(q, 1));
  CHECK(s.a(1, 3, 3) == fe(q, 1));
  CHECK(s.a(0, 3, 3).is_zero());
  CHECK(s.a(1, 2, 2).is_zero());
  CHECK(s.a(2, 2, 0).is_zero());
  CHECK(s.a(2, 3, 3).is_zero());

  SUBCASE("tensoring with the one-dimensional algebra changes nothing") {
    AlgebraScheme t = trivial_scheme(q);
    CHECK(same_structure(tensor_product(pair_scheme(q), t), pair_scheme(q)));
    CHECK(same_structure(tensor_product(t, pair_scheme(q)), pair_scheme(q)));
  }

  SUBCASE("truncations tensor to a bigger nilpotent algebra") {
    AlgebraScheme t = tensor_product(truncation_scheme(q, 1),
                                     truncation_scheme(q, 1));
    CHECK(t.rank == 4);
    CHECK(validate_algebra(t).empty());
    // (eta(x)1)(1(x)eta) = eta(x)eta sits at index 3.
    CHECK(t.a(1, 2, 3) == fe(q, 1));
    CHECK(t.a(1, 1, 3).is_zero());
  }
}

TEST_CASE("composition is the tensor product with the outer projection") {
  FieldPtr q = Field::rationals();
  Composition c = compose_algebras(pair_scheme(q), dual_numbers_scheme(q));
  CHECK(same_structure(c.scheme,
                       tensor_product(pair_scheme(q), dual_numbers_scheme(q))));
  REQUIRE(c.f.size() == 2);
  REQUIRE(c.f[0].size() == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(c.f[i][j] == (i == j ? fe(q, 1) : fe(q, 0)));
}
