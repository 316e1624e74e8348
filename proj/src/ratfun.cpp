#include "dring/ratfun.hpp"

#include <algorithm>

namespace dring {

namespace {

FieldElement grevlex_lead_coeff(const MultiPoly& p) {
  const std::pair<const Expo, FieldElement>* best = nullptr;
  for (const auto& kv : p.terms()) {
    if (!best || grevlex_greater(kv.first, best->first)) best = &kv;
  }
  return best ? best->second : FieldElement::zero(p.ring()->field);
}

MultiPoly normalize_lead(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(grevlex_lead_coeff(p).inverse());
}

// Highest variable index with positive degree, or -1 for constants.
int top_variable(const MultiPoly& a, const MultiPoly& b) {
  int n = static_cast<int>(a.ring()->vars.size());
  for (int v = n - 1; v >= 0; --v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return -1;
}

MultiPoly content_in(const MultiPoly& p, int v) {
  MultiPoly c(p.ring());
  int d = p.degree_in(v);
  for (int k = 0; k <= d; ++k) c = poly_gcd(c, p.coeff_of(v, k));
  return c;
}

MultiPoly lc_in(const MultiPoly& p, int v) {
  return p.coeff_of(v, p.degree_in(v));
}

// Univariate-in-v pseudo remainder: lc(b)^(deg a - deg b + 1) * a mod b.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int v) {
  int db = b.degree_in(v);
  MultiPoly lead = lc_in(b, v);
  MultiPoly r = a;
  int n = a.degree_in(v) - db + 1;
  int count = 0;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    MultiPoly top = lc_in(r, v);
    Expo shift(a.ring()->vars.size(), 0);
    shift[v] = static_cast<unsigned>(dr - db);
    MultiPoly shifted = MultiPoly::monomial(
        a.ring(), shift, FieldElement::one(a.ring()->field));
    r = r * lead - top * shifted * b;
    ++count;
  }
  for (; count < n; ++count) r = r * lead;
  return r;
}

}  // namespace

MultiPoly poly_exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  MultiPoly rem = a;
  MultiPoly q(a.ring());
  // Grevlex leading-term cancellation.
  auto lead_of = [](const MultiPoly& p) {
    const std::pair<const Expo, FieldElement>* best = nullptr;
    for (const auto& kv : p.terms())
      if (!best || grevlex_greater(kv.first, best->first)) best = &kv;
    return best;
  };
  const auto* lb = lead_of(b);
  while (!rem.is_zero()) {
    const auto* lr = lead_of(rem);
    if (!expo_divides(lb->first, lr->first))
      throw InputError("polynomial division is not exact");
    Expo shift = expo_sub(lb->first, lr->first);
    FieldElement c = lr->second / lb->second;
    MultiPoly t = MultiPoly::monomial(a.ring(), shift, c);
    q = q + t;
    rem = rem - t * b;
  }
  return q;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalize_lead(b);
  if (b.is_zero()) return normalize_lead(a);
  int v = top_variable(a, b);
  if (v < 0) return MultiPoly::from_long(a.ring(), 1);  // nonzero constants
  if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
    // One side free of v: gcd divides the content of the other.
    const MultiPoly& flat = a.degree_in(v) == 0 ? a : b;
    const MultiPoly& tall = a.degree_in(v) == 0 ? b : a;
    return poly_gcd(flat, content_in(tall, v));
  }
  MultiPoly ca = content_in(a, v);
  MultiPoly cb = content_in(b, v);
  MultiPoly pa = poly_exact_div(a, ca);
  MultiPoly pb = poly_exact_div(b, cb);
  MultiPoly cont = poly_gcd(ca, cb);

  // Subresultant PRS on the primitive parts.
  MultiPoly r0 = pa, r1 = pb;
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  MultiPoly g = MultiPoly::from_long(a.ring(), 1);
  MultiPoly h = MultiPoly::from_long(a.ring(), 1);
  while (true) {
    int d = r0.degree_in(v) - r1.degree_in(v);
    MultiPoly rem = pseudo_rem(r0, r1, v);
    if (rem.is_zero()) break;
    if (rem.degree_in(v) == 0) {
      r1 = rem;
      break;
    }
    // divisor = g * h^d
    MultiPoly divisor = g;
    for (int k = 0; k < d; ++k) divisor = divisor * h;
    r0 = r1;
    r1 = poly_exact_div(rem, divisor);
    g = lc_in(r0, v);
    if (d >= 1) {
      // h = h^(1-d) g^d
      MultiPoly gd = g;
      for (int k = 1; k < d; ++k) gd = gd * g;
      if (d == 1) {
        h = gd;
      } else {
        MultiPoly hd = h;
        for (int k = 1; k < d - 1; ++k) hd = hd * h;
        h = poly_exact_div(gd, hd);
      }
    }
  }
  if (r1.degree_in(v) == 0) return normalize_lead(cont);
  MultiPoly prim = poly_exact_div(r1, content_in(r1, v));
  return normalize_lead(cont * prim);
}

RationalFunction::RationalFunction(const RingPtr& ring)
    : num_(MultiPoly::zero(ring)), den_(MultiPoly::from_long(ring, 1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!same_ring(num_.ring(), den_.ring()))
    throw InputError("numerator/denominator ring mismatch");
  if (den_.is_zero()) throw InputError("division by zero polynomial");
  reduce();
}

RationalFunction RationalFunction::of(const MultiPoly& p) {
  return RationalFunction(p, MultiPoly::from_long(p.ring(), 1));
}

RationalFunction RationalFunction::from_long(const RingPtr& r, long n) {
  return of(MultiPoly::from_long(r, n));
}

RationalFunction RationalFunction::variable(const RingPtr& r, int idx) {
  return of(MultiPoly::variable(r, idx));
}

bool RationalFunction::is_polynomial() const {
  return den_.is_constant() && den_.constant_term().is_one();
}

const MultiPoly& RationalFunction::as_polynomial() const {
  if (!is_polynomial())
    throw InputError("expected a polynomial, got denominator " + den_.str());
  return num_;
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::from_long(num_.ring(), 1);
    return;
  }
  bool den_trivial = den_.is_constant();
  if (!den_trivial) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = poly_exact_div(num_, g);
      den_ = poly_exact_div(den_, g);
    }
  }
  FieldElement lc = grevlex_lead_coeff(den_);
  if (!lc.is_one()) {
    FieldElement inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(ring());
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_polynomial() && o.is_polynomial())
    return RationalFunction::of(num_ + o.num_);
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_polynomial() && o.is_polynomial())
    return RationalFunction::of(num_ * o.num_);
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw InputError("division by zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

RationalFunction RationalFunction::scaled(const FieldElement& c) const {
  RationalFunction r(ring());
  r.num_ = num_.scaled(c);
  r.den_ = c.is_zero() ? MultiPoly::from_long(ring(), 1) : den_;
  return r;
}

RationalFunction RationalFunction::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFunction acc = RationalFunction::from_long(ring(), 1);
  RationalFunction base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RationalFunction RationalFunction::derivative(int var) const {
  if (is_polynomial()) return RationalFunction::of(num_.derivative(var));
  MultiPoly dn = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RationalFunction(dn, den_ * den_);
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  std::string ns = num_.str();
  std::string ds = den_.str();
  bool n_simple = num_.terms().size() <= 1;
  bool d_simple = den_.terms().size() == 1;
  std::string out = n_simple ? ns : "(" + ns + ")";
  out += "/";
  out += d_simple ? ds : "(" + ds + ")";
  return out;
}

}  // namespace dring
