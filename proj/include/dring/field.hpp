#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "dring/error.hpp"

namespace dring {

using Integer = mpz_class;
using Rational = mpq_class;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Coefficient field descriptor.  Three kinds:
//   - Rationals: exact rationals,
//   - Prime: integers mod a prime p,
//   - NumberField: Q[s]/(P) for a monic irreducible P over Q.
// Immutable; shared by value-level FieldElement instances.
class Field {
 public:
  enum class Kind { Rationals, Prime, NumberField };

  static FieldPtr rationals();
  static FieldPtr prime(long p);
  // minpoly holds c_0..c_d with c_d = 1 (monic, degree >= 1).
  // Irreducibility is the caller's assertion; degree-0 kernels are rejected.
  static FieldPtr number_field(std::vector<Rational> minpoly,
                               std::string generator_name);

  Kind kind() const { return kind_; }
  long characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }
  // Dimension over the prime field / Q (1 unless NumberField).
  int degree() const {
    return kind_ == Kind::NumberField ? static_cast<int>(minpoly_.size()) - 1
                                      : 1;
  }
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  const std::string& generator_name() const { return gen_name_; }

  bool same(const Field& other) const;
  std::string describe() const;

 private:
  Field() = default;
  Kind kind_ = Kind::Rationals;
  long p_ = 0;
  std::vector<Rational> minpoly_;  // NumberField only
  std::string gen_name_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// One exact value in a Field.  Payload by kind: a rational, a residue in
// [0, p), or a coordinate vector of length deg(P) reduced mod P.
class FieldElement {
 public:
  FieldElement();  // 0 over Q

  static FieldElement zero(const FieldPtr& f);
  static FieldElement one(const FieldPtr& f);
  static FieldElement from_rational(const FieldPtr& f, const Rational& q);
  static FieldElement from_long(const FieldPtr& f, long n);
  // NumberField generator s.
  static FieldElement generator(const FieldPtr& f);
  // NumberField element with the given coordinates (c_0 + c_1 s + ...).
  static FieldElement from_coords(const FieldPtr& f,
                                  std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Total order within one field; used only for canonical sorting.
  bool operator<(const FieldElement& o) const;

  // Rationals only.
  const Rational& rational() const;
  // Prime only.
  long residue() const;
  // NumberField only.
  const std::vector<Rational>& coords() const;

  // True when printing needs parentheses inside a product (NumberField
  // values with more than one nonzero coordinate).
  bool needs_parens() const;
  std::string str() const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  Rational q_;                    // Rationals
  long r_ = 0;                    // Prime
  std::vector<Rational> coords_;  // NumberField
};

}  // namespace dring
