#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dring/algebra.hpp"
#include "dring/linalg.hpp"

namespace dring {

// Univariate polynomials over one coefficient field, low degree first, no
// trailing zeros; the zero polynomial is the empty vector.
using FPoly = std::vector<FieldElement>;

void fp_trim(FPoly& f);
int fp_deg(const FPoly& f);
FPoly fp_add(const FPoly& a, const FPoly& b);
FPoly fp_sub(const FPoly& a, const FPoly& b);
FPoly fp_mul(const FPoly& a, const FPoly& b);
std::pair<FPoly, FPoly> fp_divrem(const FPoly& a, const FPoly& b);
FPoly fp_monic(const FPoly& f);
FPoly fp_gcd(FPoly a, FPoly b);  // monic
// g = gcd(a, b) monic with s a + t b = g.
struct FpBezout {
  FPoly g, s, t;
};
FpBezout fp_ext_gcd(const FPoly& a, const FPoly& b);
FPoly fp_derivative(const FPoly& f);
std::string fp_str(const FPoly& f, const std::string& var);
bool fp_eq(const FPoly& a, const FPoly& b);

// Monic irreducible factors of a monic squarefree polynomial, ascending by
// (degree, coefficient order). Rational and prime fields factor directly;
// other fields need hints. Hints are asserted irreducible factors, verified
// by division before use. Without hints, degrees above the budget of 24 are
// rejected with a request for hints.
std::vector<FPoly> fp_factor_squarefree(const FPoly& f, const FieldPtr& field,
                                        const std::vector<FPoly>& hints = {});

// One local (artinian) block of an algebra.
struct LocalFactor {
  std::vector<FieldElement> idempotent;  // coordinates in the ambient algebra
  Matrix<FieldElement> factor_basis;     // rows, echelon, in ambient coords
  Matrix<FieldElement> nil_basis;        // nilradical of the block, rows
  FPoly residue_poly;                    // monic minimal polynomial P
  Matrix<FieldElement> theta;            // block coords of e_i * a, rank x l
  Matrix<FieldElement> rho;              // residue coords, deg P x rank
  Matrix<FieldElement> pi;               // rho * theta, deg P x l
  int degree() const { return fp_deg(residue_poly); }
  int local_rank() const { return static_cast<int>(factor_basis.size()); }
};

// Splitting into local blocks: orthogonal idempotents summing to the unit,
// with residue fields presented as base[x]/(P_i). Factor 0 is the block the
// scheme's projection does not kill; the rest are sorted by (degree,
// residue polynomial, idempotent coordinates).
struct LocalDecomposition {
  AlgebraScheme scheme;
  Matrix<FieldElement> nilradical_basis;
  std::vector<LocalFactor> factors;
  // True when every residue field is the base field itself (all P_i linear).
  bool residue_fields_are_base = true;
};

// Basis (echelon rows) of the subspace of nilpotent elements.
Matrix<FieldElement> nilradical(const AlgebraScheme& s);

// Smallest v >= 1 with N^v = 0; 1 for a reduced algebra.
int nilpotency_index(const AlgebraScheme& s);

LocalDecomposition local_decomposition(const AlgebraScheme& s,
                                       const std::vector<FPoly>& hints = {});

// Rows alpha[i][j] (j < deg P_i), each of length l: coordinate j of the
// residue projection of factor i as a combination of the operators. Row
// set 0 is the single identity row.
struct AssociatedOperators {
  std::vector<Matrix<FieldElement>> alpha;
};
AssociatedOperators associated_operators(const LocalDecomposition& dec);

// For each factor i >= 1, the rows sum_j roots[i-1][k]^j * alpha[i][j] over
// the splitting field, one per chosen root; factor 0 contributes the
// identity row. Roots must be distinct exact roots of the residue
// polynomials mapped into the splitting field.
std::vector<Matrix<FieldElement>> splitting_endomorphisms(
    const AssociatedOperators& ops, const LocalDecomposition& dec,
    const FieldPtr& splitting_field,
    const std::vector<std::vector<FieldElement>>& roots_per_factor);

// Coefficient bundle for algebra coordinates in a scalar extension of the
// base field (R = FieldElement, RationalFunction, ...).
template <class R>
struct ScalarOps {
  std::function<R(const FieldElement&)> embed;
  R zero;
  R one;
};

template <class R>
std::vector<R> algebra_unit(const AlgebraScheme& s, const ScalarOps<R>& ops) {
  std::vector<R> u;
  for (const auto& c : s.unit) u.push_back(ops.embed(c));
  return u;
}

// Multiplication matrix of u acting on the scalar-extended algebra.
template <class R>
Matrix<R> multiplication_matrix(const AlgebraScheme& s, const std::vector<R>& u,
                                const ScalarOps<R>& ops) {
  Matrix<R> m(s.rank, std::vector<R>(s.rank, ops.zero));
  for (const auto& [key, c] : s.mul) {
    int i = key[0], j = key[1], k = key[2];
    R cc = ops.embed(c);
    m[k][j] = m[k][j] + u[i] * cc;
    if (i != j) m[k][i] = m[k][i] + u[j] * cc;
  }
  return m;
}

// Inverse of u in the scalar-extended algebra, when it is a unit.
template <class R>
std::optional<std::vector<R>> algebra_inverse(const AlgebraScheme& s,
                                              const std::vector<R>& u,
                                              const ScalarOps<R>& ops) {
  Matrix<R> m = multiplication_matrix(s, u, ops);
  return solve(m, algebra_unit(s, ops), ops.zero);
}

// Value of a univariate polynomial whose coefficients are algebra elements
// at an algebra element, by Horner's rule.
template <class R>
std::vector<R> algebra_poly_eval(const AlgebraScheme& s,
                                 const std::vector<std::vector<R>>& coeffs,
                                 const std::vector<R>& x,
                                 const ScalarOps<R>& ops) {
  std::vector<R> acc(s.rank, ops.zero);
  for (size_t k = coeffs.size(); k-- > 0;) {
    acc = scheme_multiply(s, acc, x, ops.embed, ops.zero);
    for (int i = 0; i < s.rank; ++i) acc[i] = acc[i] + coeffs[k][i];
  }
  return acc;
}

// Newton iteration b <- b - P(b)/P'(b) from a start value whose defect
// P(c) lies in the nilpotent ideal. Converges quadratically, so
// ceil(log2(nilpotency index)) + 1 steps reach the exact root; the result
// is checked and agreement failures raise Error. P' not a unit at the
// start raises InputError.
template <class R>
std::vector<R> hensel_lift(const AlgebraScheme& s,
                           const std::vector<std::vector<R>>& coeffs,
                           std::vector<R> c, const ScalarOps<R>& ops) {
  if (coeffs.size() < 2) throw InputError("cannot lift a root of a constant");
  std::vector<std::vector<R>> deriv;
  for (size_t k = 1; k < coeffs.size(); ++k) {
    std::vector<R> row;
    FieldElement kk = FieldElement::from_long(s.field, static_cast<long>(k));
    for (const R& a : coeffs[k]) row.push_back(a * ops.embed(kk));
    deriv.push_back(std::move(row));
  }
  int nu = nilpotency_index(s);
  int steps = 1;
  while ((1 << steps) < nu) ++steps;
  ++steps;
  for (int it = 0; it < steps; ++it) {
    std::vector<R> value = algebra_poly_eval(s, coeffs, c, ops);
    bool flat = true;
    for (const R& v : value)
      if (!v.is_zero()) flat = false;
    if (flat) return c;
    std::vector<R> slope = algebra_poly_eval(s, deriv, c, ops);
    auto inv = algebra_inverse(s, slope, ops);
    if (!inv) {
      if (it == 0)
        throw InputError("derivative at the start value is not a unit");
      throw Error("derivative degenerated during root lifting");
    }
    std::vector<R> delta = scheme_multiply(s, value, *inv, ops.embed, ops.zero);
    for (int i = 0; i < s.rank; ++i) c[i] = c[i] - delta[i];
  }
  std::vector<R> value = algebra_poly_eval(s, coeffs, c, ops);
  for (const R& v : value)
    if (!v.is_zero())
      throw Error("root lifting did not converge within the nilpotency bound");
  return c;
}

// The FieldElement bundle over the scheme's own base field.
ScalarOps<FieldElement> base_ops(const FieldPtr& f);

}  // namespace dring
