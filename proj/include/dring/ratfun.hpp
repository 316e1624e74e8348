#pragma once

#include "dring/poly.hpp"

namespace dring {

// gcd of multivariate polynomials over a field, computed by content +
// subresultant pseudo-remainder recursion.  Result is normalized so its
// leading coefficient under graded reverse lex is 1; gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Exact quotient; throws when b does not divide a.
MultiPoly poly_exact_div(const MultiPoly& a, const MultiPoly& b);

// Reduced fraction of polynomials over one ring.  Invariants: denominator is
// nonzero with grevlex-leading coefficient 1; gcd(num, den) = 1; zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(const RingPtr& ring);
  RationalFunction(MultiPoly num, MultiPoly den);
  static RationalFunction of(const MultiPoly& p);
  static RationalFunction from_long(const RingPtr& r, long n);
  static RationalFunction variable(const RingPtr& r, int idx);

  const RingPtr& ring() const { return num_.ring(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  const MultiPoly& as_polynomial() const;  // throws unless den == 1

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  RationalFunction scaled(const FieldElement& c) const;
  RationalFunction pow(long n) const;
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction derivative(int var) const;
  std::string str() const;

 private:
  void reduce();
  MultiPoly num_, den_;
};

}  // namespace dring
