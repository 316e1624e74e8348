#include "dring/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dring {

unsigned expo_total(const Expo& e) {
  unsigned t = 0;
  for (unsigned x : e) t += x;
  return t;
}

Expo expo_add(const Expo& a, const Expo& b) {
  Expo r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool expo_divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r = b;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
  return r;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw InputError("duplicate variable name: " + vars[i]);
  auto r = std::make_shared<PolyRing>();
  r->field = std::move(field);
  r->vars = std::move(vars);
  return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_field(a->field, b->field) && a->vars == b->vars;
}

MultiPoly MultiPoly::constant(const RingPtr& r, const FieldElement& c) {
  MultiPoly p(r);
  if (!c.is_zero()) p.t_[Expo(r->vars.size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::from_long(const RingPtr& r, long n) {
  return constant(r, FieldElement::from_long(r->field, n));
}

MultiPoly MultiPoly::variable(const RingPtr& r, int idx) {
  if (idx < 0 || idx >= static_cast<int>(r->vars.size()))
    throw InputError("variable index out of range");
  Expo e(r->vars.size(), 0);
  e[idx] = 1;
  MultiPoly p(r);
  p.t_[e] = FieldElement::one(r->field);
  return p;
}

MultiPoly MultiPoly::monomial(const RingPtr& r, Expo e, const FieldElement& c) {
  if (e.size() != r->vars.size()) throw InputError("exponent length mismatch");
  MultiPoly p(r);
  if (!c.is_zero()) p.t_[std::move(e)] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && expo_total(t_.begin()->first) == 0;
}

FieldElement MultiPoly::constant_term() const {
  Expo zero(ring_->vars.size(), 0);
  auto it = t_.find(zero);
  return it == t_.end() ? FieldElement::zero(ring_->field) : it->second;
}

void MultiPoly::add_term(const Expo& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw InputError("polynomial ring mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw InputError("polynomial ring mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw InputError("polynomial ring mismatch");
  MultiPoly r(ring_);
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) r.add_term(expo_add(ea, eb), ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : t_) {
    FieldElement v = x * c;
    if (!v.is_zero()) r.t_.emplace(e, v);
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly acc = MultiPoly::from_long(ring_, 1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return t_ == o.t_;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(expo_total(e)));
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) continue;
    Expo ne = e;
    ne[var] -= 1;
    r.add_term(ne, c * FieldElement::from_long(ring_->field, e[var]));
  }
  return r;
}

MultiPoly MultiPoly::coeff_of(int var, unsigned k) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : t_) {
    if (e[var] != k) continue;
    Expo ne = e;
    ne[var] = 0;
    r.add_term(ne, c);
  }
  return r;
}

MultiPoly MultiPoly::map_coefficients(
    const FieldPtr& target,
    const std::function<FieldElement(const FieldElement&)>& fn) const {
  auto nr = make_ring(target, ring_->vars);
  MultiPoly r(nr);
  for (const auto& [e, c] : t_) r.add_term(e, fn(c));
  return r;
}

MultiPoly MultiPoly::into_ring(const RingPtr& target) const {
  if (!same_field(ring_->field, target->field))
    throw InputError("ring embedding requires the same coefficient field");
  std::vector<int> idx(ring_->vars.size());
  for (size_t i = 0; i < ring_->vars.size(); ++i) {
    idx[i] = target->var_index(ring_->vars[i]);
    if (idx[i] < 0 && degree_in(static_cast<int>(i)) > 0)
      throw InputError("variable " + ring_->vars[i] + " missing from target ring");
  }
  MultiPoly r(target);
  for (const auto& [e, c] : t_) {
    Expo ne(target->vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      ne[idx[i]] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

// Graded reverse lexicographic, the default term order.
bool grevlex_greater(const Expo& a, const Expo& b) {
  unsigned ta = expo_total(a), tb = expo_total(b);
  if (ta != tb) return ta > tb;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<const std::pair<const Expo, FieldElement>*> order;
  order.reserve(t_.size());
  for (const auto& kv : t_) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return grevlex_greater(a->first, b->first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* kv : order) {
    const Expo& e = kv->first;
    FieldElement c = kv->second;
    bool negative = false;
    if (ring_->field->kind() == Field::Kind::Rationals && c.rational() < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool has_vars = expo_total(e) > 0;
    bool coeff_is_one = c.is_one();
    if (!has_vars || !coeff_is_one) {
      if (c.needs_parens())
        os << "(" << c.str() << ")";
      else
        os << c.str();
    }
    bool printed = !has_vars || !coeff_is_one;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (printed) os << "*";
      printed = true;
      os << ring_->vars[v];
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

}  // namespace dring
