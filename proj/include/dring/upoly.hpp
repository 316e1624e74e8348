#pragma once

#include <utility>
#include <vector>

#include "dring/field.hpp"

namespace dring {

// Dense univariate polynomials, coefficient index = degree.
// The zero polynomial is the empty vector; nonzero polys carry no trailing
// zero coefficients.
using UPolyQ = std::vector<Rational>;
using UPolyP = std::vector<long>;  // over GF(p), entries in [0, p)

int updeg(const UPolyQ& f);
void uptrim(UPolyQ& f);
UPolyQ upadd(const UPolyQ& a, const UPolyQ& b);
UPolyQ upsub(const UPolyQ& a, const UPolyQ& b);
UPolyQ upmul(const UPolyQ& a, const UPolyQ& b);
UPolyQ upscale(const UPolyQ& a, const Rational& c);
// Quotient/remainder; b must be nonzero.
std::pair<UPolyQ, UPolyQ> updivrem(const UPolyQ& a, const UPolyQ& b);
UPolyQ upderiv(const UPolyQ& f);
UPolyQ upmonic(const UPolyQ& f);
UPolyQ upgcd(const UPolyQ& a, const UPolyQ& b);  // monic
Rational upeval(const UPolyQ& f, const Rational& x);

int updeg_p(const UPolyP& f);
UPolyP upmul_p(const UPolyP& a, const UPolyP& b, long p);
std::pair<UPolyP, UPolyP> updivrem_p(const UPolyP& a, const UPolyP& b, long p);
UPolyP upgcd_p(const UPolyP& a, const UPolyP& b, long p);  // monic
UPolyP uppowmod_p(const UPolyP& base, const Integer& e, const UPolyP& mod, long p);

// Distinct monic irreducible factors with multiplicities, ascending by
// (degree, coefficient sequence).  Requires squarefree input for the
// *_squarefree variants.
std::vector<UPolyP> factor_squarefree_mod_p(const UPolyP& f, long p);
std::vector<std::pair<UPolyP, int>> factor_mod_p(const UPolyP& f, long p);

// Full rational factorization: f = lc * prod fi^mi with fi monic irreducible
// over Q.  `hints`, when nonempty, is a candidate list of monic factors that
// is verified (product with multiplicities matches) and then used directly;
// invalid hints are rejected with InputError.
struct QFactor {
  UPolyQ factor;
  int multiplicity;
};
std::vector<QFactor> factor_rational(const UPolyQ& f,
                                     const std::vector<UPolyQ>& hints = {},
                                     int degree_budget = 24);

}  // namespace dring
