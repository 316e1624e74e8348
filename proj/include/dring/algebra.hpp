#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dring/field.hpp"
#include "dring/linalg.hpp"

namespace dring {

// A finite free algebra over a base field, given by structure constants
// eps_i * eps_j = sum_k a[i][j][k] eps_k, together with the coordinates of
// the multiplicative unit and a linear functional pi projecting onto the
// base field. Normalized means pi is the first-coordinate functional.
struct AlgebraScheme {
  FieldPtr field;
  int rank = 0;
  std::vector<std::string> labels;
  // Sparse structure constants keyed (i, j, k) with i <= j; multiplication
  // is commutative by construction.
  std::map<std::array<int, 3>, FieldElement> mul;
  std::vector<FieldElement> unit;
  std::vector<FieldElement> pi;

  // Structure constant for any index order.
  FieldElement a(int i, int j, int k) const;
  // Records a constant; rejects a conflicting duplicate entry.
  void set_a(int i, int j, int k, const FieldElement& c);
  bool is_normalized() const;
};

// Empty scheme with zero structure constants and unit/pi to fill in.
AlgebraScheme make_scheme(const FieldPtr& field,
                          std::vector<std::string> labels);

// Every broken invariant, one message each; empty iff the scheme is a
// commutative associative unital algebra with a unital projection hom.
std::vector<std::string> validate_algebra(const AlgebraScheme& s);

// Coordinates of the product of two coordinate vectors over any
// coefficient ring R that embeds the base field.
template <class R, class Embed>
std::vector<R> scheme_multiply(const AlgebraScheme& s, const std::vector<R>& x,
                               const std::vector<R>& y, Embed embed,
                               const R& zero) {
  if (static_cast<int>(x.size()) != s.rank ||
      static_cast<int>(y.size()) != s.rank)
    throw InputError("coordinate vector length does not match algebra rank");
  std::vector<R> out(s.rank, zero);
  for (const auto& [key, c] : s.mul) {
    int i = key[0], j = key[1], k = key[2];
    R cc = embed(c);
    out[k] = out[k] + x[i] * y[j] * cc;
    if (i != j) out[k] = out[k] + x[j] * y[i] * cc;
  }
  return out;
}

// Field-coefficient convenience wrapper.
std::vector<FieldElement> multiply_elements(const AlgebraScheme& s,
                                            const std::vector<FieldElement>& x,
                                            const std::vector<FieldElement>& y);

// Structure-constant, unit, and projection equality (labels ignored).
bool same_structure(const AlgebraScheme& a, const AlgebraScheme& b);

// Change of basis making pi the first-coordinate functional: new basis is
// the unit followed by a deterministic echelon basis of ker(pi). Returns
// the normalized scheme and the matrix whose rows express the new basis in
// the old coordinates. Identity matrix when already in normal position.
std::pair<AlgebraScheme, Matrix<FieldElement>> normalize_basis(
    const AlgebraScheme& s);

// Rank l1+l2-1 algebra identifying the two eps_0 coordinates; D-ring
// structures on it are exactly pairs of structures on the factors.
AlgebraScheme fibred_product(const AlgebraScheme& a1, const AlgebraScheme& a2);

// Rank l1*l2 algebra with basis eps_i (x) eps'_j at index i + j*l1.
AlgebraScheme tensor_product(const AlgebraScheme& a1, const AlgebraScheme& a2);

// Composition a2 evaluated on a1-coordinates: same structure constants as
// the tensor product, plus the projection applying the outer (a2) pi to
// coordinates, an l1 x (l1*l2) matrix selecting the j = 0 block.
struct Composition {
  AlgebraScheme scheme;
  Matrix<FieldElement> f;
};
Composition compose_algebras(const AlgebraScheme& a1, const AlgebraScheme& a2);

// Catalog of the standard small schemes.
AlgebraScheme trivial_scheme(const FieldPtr& f);
// R[eta]/(eta^(n+1)): operators form a higher derivation of length n.
AlgebraScheme truncation_scheme(const FieldPtr& f, int n);
// Length-1 truncation: a single derivation.
AlgebraScheme dual_numbers_scheme(const FieldPtr& f);
// R x R: the operator is an endomorphism.
AlgebraScheme pair_scheme(const FieldPtr& f);
// Rank 2 with eps_1^2 = c eps_1: D(xy) = xD(y) + D(x)y + c D(x)D(y).
AlgebraScheme twisted_scheme(const FieldPtr& f, const FieldElement& c);
// R x R[eta]/(eta^2) with e(r) = (r, sigma(r) + delta(r) eta): an
// endomorphism plus a sigma-twisted derivation.
AlgebraScheme twisted_endo_scheme(const FieldPtr& f);

}  // namespace dring
