#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dring/field.hpp"

namespace dring {

// Exponent vector; length = number of ring variables.
using Expo = std::vector<unsigned>;

unsigned expo_total(const Expo& e);
Expo expo_add(const Expo& a, const Expo& b);
bool expo_divides(const Expo& a, const Expo& b);  // a | b componentwise
Expo expo_sub(const Expo& a, const Expo& b);      // b - a, assumes divides
Expo expo_lcm(const Expo& a, const Expo& b);
bool grevlex_greater(const Expo& a, const Expo& b);

// Polynomial ring descriptor: coefficient field plus ordered variable names.
struct PolyRing {
  FieldPtr field;
  std::vector<std::string> vars;
  int var_index(const std::string& name) const;  // -1 when absent
};
using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Sparse multivariate polynomial; term map keyed by exponent vector.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  static MultiPoly zero(const RingPtr& r) { return MultiPoly(r); }
  static MultiPoly constant(const RingPtr& r, const FieldElement& c);
  static MultiPoly from_long(const RingPtr& r, long n);
  static MultiPoly variable(const RingPtr& r, int idx);
  static MultiPoly monomial(const RingPtr& r, Expo e, const FieldElement& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Expo, FieldElement>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  // Constant term (zero element if absent).
  FieldElement constant_term() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const FieldElement& c) const;
  MultiPoly pow(unsigned n) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  MultiPoly derivative(int var) const;
  // Coefficient of var^k viewed as a polynomial in `var` (stays in the ring).
  MultiPoly coeff_of(int var, unsigned k) const;
  // Map every coefficient through fn (same or different field).
  MultiPoly map_coefficients(const FieldPtr& target,
                             const std::function<FieldElement(const FieldElement&)>& fn) const;
  // Rename/extend to another ring; variables are matched by name and must
  // all exist in the target ring.
  MultiPoly into_ring(const RingPtr& target) const;
  // Substitute ring variables by values in a commutative ring T.
  // `vals` has one entry per variable; `embed` lifts coefficients into T.
  template <class T>
  T evaluate(const std::vector<T>& vals,
             const std::function<T(const FieldElement&)>& embed) const;

  void add_term(const Expo& e, const FieldElement& c);  // accumulate
  std::string str() const;

 private:
  RingPtr ring_;
  std::map<Expo, FieldElement> t_;
};

template <class T>
T MultiPoly::evaluate(const std::vector<T>& vals,
                      const std::function<T(const FieldElement&)>& embed) const {
  T acc = embed(FieldElement::zero(ring_->field));
  for (const auto& [e, c] : t_) {
    T term = embed(c);
    for (size_t v = 0; v < e.size(); ++v) {
      for (unsigned k = 0; k < e[v]; ++k) term = term * vals[v];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace dring
