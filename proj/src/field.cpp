#include "dring/field.hpp"

#include <algorithm>
#include <sstream>

namespace dring {

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_pos(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long mul_mod(long a, long b, long p) {
  return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw InputError("not invertible mod " + std::to_string(p));
  return mod_pos(t, p);
}

// Fold of residues of an mpz mod p.
long mpz_mod_long(const Integer& z, long p) {
  Integer r = z % p;
  long v = r.get_si();
  return mod_pos(v, p);
}

// Dense polynomial remainder of `v` modulo the monic `m`, both over Q.
void reduce_mod_minpoly(std::vector<Rational>& v,
                        const std::vector<Rational>& m) {
  size_t d = m.size() - 1;
  while (v.size() > d) {
    Rational lead = v.back();
    size_t off = v.size() - 1 - d;
    if (lead != 0) {
      for (size_t i = 0; i < d; ++i) v[off + i] -= lead * m[i];
    }
    v.pop_back();
  }
  v.resize(d, Rational(0));
}

}  // namespace

FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Rationals;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(long p) {
  if (!is_prime_long(p)) {
    throw InputError("characteristic must be 0 or a prime, got " +
                     std::to_string(p));
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Prime;
  f->p_ = p;
  return f;
}

FieldPtr Field::number_field(std::vector<Rational> minpoly,
                             std::string generator_name) {
  if (minpoly.size() < 2) throw InputError("number field minpoly needs degree >= 1");
  if (minpoly.back() != 1) throw InputError("number field minpoly must be monic");
  if (generator_name.empty()) throw InputError("number field generator needs a name");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::NumberField;
  f->minpoly_ = std::move(minpoly);
  f->gen_name_ = std::move(generator_name);
  return f;
}

bool Field::same(const Field& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Rationals:
      return true;
    case Kind::Prime:
      return p_ == other.p_;
    case Kind::NumberField:
      return minpoly_ == other.minpoly_ && gen_name_ == other.gen_name_;
  }
  return false;
}

std::string Field::describe() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Prime:
      return "GF(" + std::to_string(p_) + ")";
    case Kind::NumberField: {
      std::ostringstream os;
      os << "Q[" << gen_name_ << "]/(";
      bool first = true;
      for (size_t i = minpoly_.size(); i-- > 0;) {
        if (minpoly_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << minpoly_[i].get_str();
        if (i >= 1) os << "*" << gen_name_;
        if (i >= 2) os << "^" << i;
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

FieldElement::FieldElement() : field_(Field::rationals()), q_(0) {}

FieldElement FieldElement::zero(const FieldPtr& f) { return from_long(f, 0); }

FieldElement FieldElement::one(const FieldPtr& f) { return from_long(f, 1); }

FieldElement FieldElement::from_long(const FieldPtr& f, long n) {
  return from_rational(f, Rational(n));
}

FieldElement FieldElement::from_rational(const FieldPtr& f, const Rational& q) {
  FieldElement e;
  e.field_ = f;
  switch (f->kind()) {
    case Field::Kind::Rationals:
      e.q_ = q;
      e.q_.canonicalize();
      break;
    case Field::Kind::Prime: {
      long p = f->characteristic();
      long num = mpz_mod_long(q.get_num(), p);
      long den = mpz_mod_long(q.get_den(), p);
      if (den == 0) throw InputError("denominator divisible by " + std::to_string(p));
      e.r_ = mul_mod(num, inv_mod(den, p), p);
      break;
    }
    case Field::Kind::NumberField: {
      e.coords_.assign(f->degree(), Rational(0));
      e.coords_[0] = q;
      e.coords_[0].canonicalize();
      break;
    }
  }
  return e;
}

FieldElement FieldElement::generator(const FieldPtr& f) {
  if (f->kind() != Field::Kind::NumberField)
    throw InputError("field has no generator element");
  std::vector<Rational> c(f->degree(), Rational(0));
  if (c.size() < 2) throw InputError("degree-1 number field has no generator");
  c[1] = 1;
  return from_coords(f, std::move(c));
}

FieldElement FieldElement::from_coords(const FieldPtr& f,
                                       std::vector<Rational> coords) {
  if (f->kind() != Field::Kind::NumberField)
    throw InputError("coordinate constructor needs a number field");
  coords.resize(f->degree(), Rational(0));
  FieldElement e;
  e.field_ = f;
  for (auto& c : coords) c.canonicalize();
  e.coords_ = std::move(coords);
  return e;
}

bool FieldElement::is_zero() const {
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      return q_ == 0;
    case Field::Kind::Prime:
      return r_ == 0;
    case Field::Kind::NumberField:
      return std::all_of(coords_.begin(), coords_.end(),
                         [](const Rational& c) { return c == 0; });
  }
  return false;
}

bool FieldElement::is_one() const {
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      return q_ == 1;
    case Field::Kind::Prime:
      return r_ == 1;
    case Field::Kind::NumberField: {
      if (coords_[0] != 1) return false;
      for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
      return true;
    }
  }
  return false;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(field_, o.field_))
    throw InputError("field mismatch: " + field_->describe() + " vs " +
                     o.field_->describe());
}

FieldElement FieldElement::operator-() const {
  FieldElement e = *this;
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      e.q_ = -q_;
      break;
    case Field::Kind::Prime:
      e.r_ = r_ == 0 ? 0 : field_->characteristic() - r_;
      break;
    case Field::Kind::NumberField:
      for (auto& c : e.coords_) c = -c;
      break;
  }
  return e;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement e = *this;
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      e.q_ += o.q_;
      break;
    case Field::Kind::Prime:
      e.r_ = mod_pos(r_ + o.r_, field_->characteristic());
      break;
    case Field::Kind::NumberField:
      for (size_t i = 0; i < e.coords_.size(); ++i) e.coords_[i] += o.coords_[i];
      break;
  }
  return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  FieldElement e = *this;
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      e.q_ *= o.q_;
      e.q_.canonicalize();
      break;
    case Field::Kind::Prime:
      e.r_ = mul_mod(r_, o.r_, field_->characteristic());
      break;
    case Field::Kind::NumberField: {
      size_t d = coords_.size();
      std::vector<Rational> prod(2 * d - 1, Rational(0));
      for (size_t i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
          if (o.coords_[j] == 0) continue;
          prod[i + j] += coords_[i] * o.coords_[j];
        }
      }
      reduce_mod_minpoly(prod, field_->minpoly());
      e.coords_ = std::move(prod);
      break;
    }
  }
  return e;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InputError("division by zero in " + field_->describe());
  FieldElement e = *this;
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      e.q_ = 1 / q_;
      break;
    case Field::Kind::Prime:
      e.r_ = inv_mod(r_, field_->characteristic());
      break;
    case Field::Kind::NumberField: {
      // Extended Euclid in Q[s] against the minimal polynomial.
      auto trim = [](std::vector<Rational>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
      };
      auto is_zero_poly = [](const std::vector<Rational>& v) {
        return v.size() == 1 && v[0] == 0;
      };
      std::vector<Rational> r0 = field_->minpoly();
      std::vector<Rational> r1 = coords_;
      trim(r1);
      std::vector<Rational> t0{Rational(0)}, t1{Rational(1)};
      while (r1.size() > 1) {
        std::vector<Rational> q(r0.size() - r1.size() + 1, Rational(0));
        std::vector<Rational> rem = r0;
        while (!is_zero_poly(rem) && rem.size() >= r1.size()) {
          size_t shift = rem.size() - r1.size();
          Rational c = rem.back() / r1.back();
          q[shift] += c;
          for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
          trim(rem);
          if (rem.size() == r1.size() && rem.back() == 0) trim(rem);
        }
        std::vector<Rational> nt = t0;
        nt.resize(std::max(nt.size(), q.size() + t1.size() - 1), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
          if (q[i] == 0) continue;
          for (size_t j = 0; j < t1.size(); ++j) nt[i + j] -= q[i] * t1[j];
        }
        trim(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
        trim(r1);
        if (is_zero_poly(r1))
          throw InputError("minimal polynomial is not irreducible: zero divisor hit");
        t0 = std::move(t1);
        t1 = std::move(nt);
      }
      Rational lead = r1[0];
      for (auto& c : t1) c /= lead;
      t1.resize(field_->degree(), Rational(0));
      reduce_mod_minpoly(t1, field_->minpoly());
      e.coords_ = std::move(t1);
      break;
    }
  }
  return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement acc = one(field_);
  FieldElement base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      return q_ == o.q_;
    case Field::Kind::Prime:
      return r_ == o.r_;
    case Field::Kind::NumberField:
      return coords_ == o.coords_;
  }
  return false;
}

bool FieldElement::operator<(const FieldElement& o) const {
  check_same(o);
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      return q_ < o.q_;
    case Field::Kind::Prime:
      return r_ < o.r_;
    case Field::Kind::NumberField:
      for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != o.coords_[i]) return coords_[i] < o.coords_[i];
      }
      return false;
  }
  return false;
}

const Rational& FieldElement::rational() const {
  if (field_->kind() == Field::Kind::Rationals) return q_;
  if (field_->kind() == Field::Kind::NumberField) {
    for (size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) throw InputError("not a rational value");
    return coords_[0];
  }
  throw InputError("not a rational value");
}

long FieldElement::residue() const {
  if (field_->kind() != Field::Kind::Prime)
    throw InputError("not a prime-field value");
  return r_;
}

const std::vector<Rational>& FieldElement::coords() const {
  if (field_->kind() != Field::Kind::NumberField)
    throw InputError("not a number-field value");
  return coords_;
}

bool FieldElement::needs_parens() const {
  if (field_->kind() != Field::Kind::NumberField) return false;
  int nonzero = 0;
  for (const auto& c : coords_)
    if (c != 0) ++nonzero;
  if (nonzero > 1) return true;
  // A single generator-power term like 2*s also multiplies like a product.
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return true;
  return false;
}

std::string FieldElement::str() const {
  switch (field_->kind()) {
    case Field::Kind::Rationals:
      return q_.get_str();
    case Field::Kind::Prime:
      return std::to_string(r_);
    case Field::Kind::NumberField: {
      if (is_zero()) return "0";
      std::ostringstream os;
      bool first = true;
      for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        Rational c = coords_[i];
        if (first) {
          if (c < 0) {
            os << "-";
            c = -c;
          }
        } else {
          os << (c < 0 ? " - " : " + ");
          if (c < 0) c = -c;
        }
        first = false;
        bool unit_coeff = (c == 1 && i > 0);
        if (!unit_coeff) os << c.get_str();
        if (i > 0) {
          if (!unit_coeff) os << "*";
          os << field_->generator_name();
          if (i > 1) os << "^" << i;
        }
      }
      return os.str();
    }
  }
  return "?";
}

}  // namespace dring
