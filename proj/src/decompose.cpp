#include "dring/decompose.hpp"

#include <algorithm>
#include <utility>

#include "dring/upoly.hpp"

namespace dring {

void fp_trim(FPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int fp_deg(const FPoly& f) { return static_cast<int>(f.size()) - 1; }

FPoly fp_add(const FPoly& a, const FPoly& b) {
  FPoly out = a.size() >= b.size() ? a : b;
  const FPoly& small = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < small.size(); ++i) out[i] = out[i] + small[i];
  fp_trim(out);
  return out;
}

FPoly fp_sub(const FPoly& a, const FPoly& b) {
  FPoly nb;
  for (const auto& c : b) nb.push_back(-c);
  return fp_add(a, nb);
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldElement zero = FieldElement::zero(a[0].field());
  FPoly out(a.size() + b.size() - 1, zero);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  }
  fp_trim(out);
  return out;
}

std::pair<FPoly, FPoly> fp_divrem(const FPoly& a, const FPoly& b) {
  if (b.empty()) throw Error("univariate division by zero");
  FieldElement lead_inv = b.back().inverse();
  FieldElement zero = FieldElement::zero(b.back().field());
  FPoly r = a;
  fp_trim(r);
  if (r.size() < b.size()) return {{}, r};
  FPoly q(r.size() - b.size() + 1, zero);
  while (r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    FieldElement c = r.back() * lead_inv;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = r[shift + i] - c * b[i];
    fp_trim(r);
    if (r.empty()) break;
  }
  fp_trim(q);
  return {q, r};
}

FPoly fp_monic(const FPoly& f) {
  if (f.empty()) return f;
  FieldElement inv = f.back().inverse();
  FPoly out;
  for (const auto& c : f) out.push_back(c * inv);
  return out;
}

FPoly fp_gcd(FPoly a, FPoly b) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FPoly r = fp_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

FpBezout fp_ext_gcd(const FPoly& a, const FPoly& b) {
  if (a.empty() && b.empty()) throw Error("gcd of two zero polynomials");
  FieldPtr f = a.empty() ? b[0].field() : a[0].field();
  FPoly one{FieldElement::one(f)};
  FPoly r0 = a, r1 = b, s0 = one, s1 = {}, t0 = {}, t1 = one;
  fp_trim(r0);
  fp_trim(r1);
  while (!r1.empty()) {
    auto [q, r] = fp_divrem(r0, r1);
    FPoly s = fp_sub(s0, fp_mul(q, s1));
    FPoly t = fp_sub(t0, fp_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  FieldElement inv = r0.back().inverse();
  auto scale = [&](FPoly p) {
    for (auto& c : p) c = c * inv;
    return p;
  };
  return {scale(r0), scale(s0), scale(t0)};
}

FPoly fp_derivative(const FPoly& f) {
  FPoly out;
  for (size_t i = 1; i < f.size(); ++i)
    out.push_back(f[i] * FieldElement::from_long(f[i].field(),
                                                 static_cast<long>(i)));
  fp_trim(out);
  return out;
}

bool fp_eq(const FPoly& a, const FPoly& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string fp_str(const FPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::string out;
  for (size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    FieldElement c = f[i];
    bool neg = false;
    std::string cs = c.str();
    if (!cs.empty() && cs[0] == '-' && !c.needs_parens()) {
      neg = true;
      cs = cs.substr(1);
    }
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (i == 0) {
      body = c.needs_parens() ? "(" + c.str() + ")" : cs;
      if (neg && c.needs_parens()) body = "(" + c.str() + ")", out.pop_back();
    } else {
      std::string power = i == 1 ? var : var + "^" + std::to_string(i);
      if (c.is_one())
        body = power;
      else if ((-c).is_one() && !out.empty() && neg)
        body = power;
      else if (c.needs_parens())
        body = "(" + c.str() + ")*" + power;
      else
        body = cs + "*" + power;
    }
    out += body;
  }
  return out.empty() ? "0" : out;
}

namespace {

bool fp_less(const FPoly& a, const FPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool vec_less(const std::vector<FieldElement>& a,
              const std::vector<FieldElement>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

}  // namespace

std::vector<FPoly> fp_factor_squarefree(const FPoly& f, const FieldPtr& field,
                                        const std::vector<FPoly>& hints) {
  if (fp_deg(f) < 1) throw InputError("cannot factor a constant");
  std::vector<FPoly> out;
  if (!hints.empty()) {
    FPoly rem = f;
    for (const auto& h : hints) {
      if (fp_deg(h) < 1) continue;
      auto [q, r] = fp_divrem(rem, h);
      if (r.empty()) {
        out.push_back(fp_monic(h));
        rem = q;
      }
    }
    if (fp_deg(rem) == 0) {
      FPoly prod{FieldElement::one(field)};
      for (const auto& g : out) prod = fp_mul(prod, g);
      bool coprime = true;
      for (size_t i = 0; i < out.size() && coprime; ++i)
        for (size_t j = i + 1; j < out.size() && coprime; ++j)
          if (fp_deg(fp_gcd(out[i], out[j])) != 0) coprime = false;
      if (coprime && fp_eq(prod, fp_monic(f))) {
        std::sort(out.begin(), out.end(), fp_less);
        return out;
      }
    }
    out.clear();
  }
  if (field->kind() == Field::Kind::Rationals) {
    if (fp_deg(f) > 24)
      throw InputError(
          "univariate factorization budget exceeded; provide factor hints");
    UPolyQ fq;
    for (const auto& c : f) fq.push_back(c.rational());
    for (const auto& [factor, mult] : factor_rational(fq)) {
      FPoly g;
      for (const auto& c : factor)
        g.push_back(FieldElement::from_rational(field, c));
      for (int m = 0; m < mult; ++m) out.push_back(g);
    }
  } else if (field->kind() == Field::Kind::Prime) {
    UPolyP fp;
    for (const auto& c : f) fp.push_back(c.residue());
    for (const auto& factor : factor_squarefree_mod_p(fp, field->characteristic())) {
      FPoly g;
      for (long c : factor) g.push_back(FieldElement::from_long(field, c));
      out.push_back(g);
    }
  } else {
    throw InputError(
        "factorization over this field needs factor hints covering the "
        "polynomial");
  }
  std::sort(out.begin(), out.end(), fp_less);
  return out;
}

ScalarOps<FieldElement> base_ops(const FieldPtr& f) {
  return {[](const FieldElement& c) { return c; }, FieldElement::zero(f),
          FieldElement::one(f)};
}

namespace {

// Echelon rows with pivot bookkeeping: reduction against the rows and
// coordinate extraction for vectors inside the row span.
struct Echelon {
  Matrix<FieldElement> rows;
  std::vector<int> pivots;

  static Echelon make(Matrix<FieldElement> m) {
    Echelon e;
    std::vector<int> piv = rref(m);
    for (size_t k = 0; k < piv.size(); ++k) e.rows.push_back(m[k]);
    e.pivots = piv;
    return e;
  }

  int dim() const { return static_cast<int>(rows.size()); }

  std::vector<FieldElement> reduce(std::vector<FieldElement> v) const {
    for (size_t k = 0; k < rows.size(); ++k) {
      FieldElement c = v[pivots[k]];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * rows[k][j];
    }
    return v;
  }

  // Coordinates of a vector known to lie in the row span.
  std::vector<FieldElement> coords(const std::vector<FieldElement>& v) const {
    std::vector<FieldElement> out;
    for (int p : pivots) out.push_back(v[p]);
    return out;
  }
};

std::vector<FieldElement> fe_zero_vec(const FieldPtr& f, int n) {
  return std::vector<FieldElement>(n, FieldElement::zero(f));
}

// Minimal polynomial of gamma inside a unital algebra presented by a
// multiplication closure; dim bounds the degree.
FPoly minpoly_by_powers(
    const std::function<std::vector<FieldElement>(
        const std::vector<FieldElement>&, const std::vector<FieldElement>&)>&
        mult,
    const std::vector<FieldElement>& unit,
    const std::vector<FieldElement>& gamma, int dim, const FieldPtr& field) {
  std::vector<std::vector<FieldElement>> powers{unit};
  FieldElement zero = FieldElement::zero(field);
  for (int k = 1; k <= dim; ++k) {
    powers.push_back(mult(powers.back(), gamma));
    Matrix<FieldElement> m(unit.size(), fe_zero_vec(field, k));
    for (int j = 0; j < k; ++j)
      for (size_t r = 0; r < unit.size(); ++r) m[r][j] = powers[j][r];
    auto x = solve(m, powers[k], zero);
    if (x) {
      FPoly p;
      for (int j = 0; j < k; ++j) p.push_back(-(*x)[j]);
      p.push_back(FieldElement::one(field));
      return p;
    }
  }
  throw Error("no linear dependence among element powers within the rank");
}

std::vector<std::vector<FieldElement>> power_list(
    const std::function<std::vector<FieldElement>(
        const std::vector<FieldElement>&, const std::vector<FieldElement>&)>&
        mult,
    const std::vector<FieldElement>& unit,
    const std::vector<FieldElement>& gamma, int count) {
  std::vector<std::vector<FieldElement>> powers{unit};
  for (int k = 1; k < count; ++k) powers.push_back(mult(powers.back(), gamma));
  return powers;
}

std::vector<FieldElement> eval_fpoly(
    const FPoly& g, const std::vector<std::vector<FieldElement>>& powers,
    const FieldPtr& field) {
  std::vector<FieldElement> out =
      fe_zero_vec(field, powers.empty() ? 0 : powers[0].size());
  for (size_t j = 0; j < g.size(); ++j) {
    if (g[j].is_zero()) continue;
    for (size_t r = 0; r < out.size(); ++r)
      out[r] = out[r] + g[j] * powers[j][r];
  }
  return out;
}

}  // namespace

Matrix<FieldElement> nilradical(const AlgebraScheme& s) {
  FieldElement zero = FieldElement::zero(s.field);
  FieldElement one = FieldElement::one(s.field);
  int l = s.rank;
  if (s.field->characteristic() == 0) {
    // Gram matrix of the trace form (x, y) -> tr(mult by xy).
    std::vector<Matrix<FieldElement>> m(l);
    for (int i = 0; i < l; ++i) {
      m[i] = Matrix<FieldElement>(l, fe_zero_vec(s.field, l));
      for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k) m[i][k][j] = s.a(i, j, k);
    }
    Matrix<FieldElement> gram(l, fe_zero_vec(s.field, l));
    for (int i = 0; i < l; ++i)
      for (int j = i; j < l; ++j) {
        FieldElement t = zero;
        for (int r = 0; r < l; ++r)
          for (int c = 0; c < l; ++c) t = t + m[i][r][c] * m[j][c][r];
        gram[i][j] = t;
        gram[j][i] = t;
      }
    Matrix<FieldElement> basis = kernel(gram, zero, one);
    rref(basis);
    return basis;
  }
  // Characteristic p: x is nilpotent exactly when x^(p^m) = 0 once
  // p^m >= rank, and over the prime field that power map is linear.
  long p = s.field->characteristic();
  long q = 1;
  while (q < l) q *= p;
  Matrix<FieldElement> frob(l, fe_zero_vec(s.field, l));
  for (int j = 0; j < l; ++j) {
    std::vector<FieldElement> x = fe_zero_vec(s.field, l);
    x[j] = one;
    long e = q;
    // x^q by repeated p-th powers.
    while (e > 1) {
      std::vector<FieldElement> acc = x;
      for (long t = 1; t < p; ++t) acc = multiply_elements(s, acc, x);
      x = acc;
      e /= p;
    }
    for (int k = 0; k < l; ++k) frob[k][j] = x[k];
  }
  Matrix<FieldElement> basis = kernel(frob, zero, one);
  rref(basis);
  return basis;
}

int nilpotency_index(const AlgebraScheme& s) {
  Matrix<FieldElement> n = nilradical(s);
  if (n.empty()) return 1;
  Matrix<FieldElement> cur = n;
  int v = 1;
  while (!cur.empty()) {
    Matrix<FieldElement> next;
    for (const auto& a : cur)
      for (const auto& b : n) next.push_back(multiply_elements(s, a, b));
    std::vector<int> piv = rref(next);
    next.resize(piv.size());
    cur = std::move(next);
    ++v;
    if (v > s.rank + 1) throw Error("nilpotency chain failed to terminate");
  }
  return v;
}

LocalDecomposition local_decomposition(const AlgebraScheme& s,
                                       const std::vector<FPoly>& hints) {
  {
    auto report = validate_algebra(s);
    if (!report.empty())
      throw InputError("cannot decompose an invalid algebra: " + report[0]);
  }
  if (!s.is_normalized())
    throw InputError("decomposition expects a normalized algebra");
  FieldPtr F = s.field;
  FieldElement zero = FieldElement::zero(F);
  FieldElement one = FieldElement::one(F);
  int l = s.rank;

  LocalDecomposition dec;
  dec.scheme = s;
  dec.nilradical_basis = nilradical(s);
  Echelon nil = Echelon::make(dec.nilradical_basis);

  // Quotient modulo the nilradical: coordinates at the non-pivot columns.
  std::vector<int> qcols;
  {
    std::vector<bool> is_pivot(l, false);
    for (int p : nil.pivots) is_pivot[p] = true;
    for (int c = 0; c < l; ++c)
      if (!is_pivot[c]) qcols.push_back(c);
  }
  int qdim = static_cast<int>(qcols.size());
  auto to_q = [&](const std::vector<FieldElement>& v) {
    std::vector<FieldElement> r = nil.reduce(v);
    std::vector<FieldElement> out;
    for (int c : qcols) out.push_back(r[c]);
    return out;
  };
  auto to_a = [&](const std::vector<FieldElement>& qv) {
    std::vector<FieldElement> out = fe_zero_vec(F, l);
    for (int i = 0; i < qdim; ++i) out[qcols[i]] = qv[i];
    return out;
  };
  std::function<std::vector<FieldElement>(const std::vector<FieldElement>&,
                                          const std::vector<FieldElement>&)>
      qmul = [&](const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
        return to_q(multiply_elements(s, to_a(a), to_a(b)));
      };

  // Split the reduced quotient into fields by factoring minimal polynomials
  // of candidate elements and cutting along the induced idempotents.
  struct Block {
    std::vector<FieldElement> unit;
    Matrix<FieldElement> basis;
  };
  std::vector<Block> pending, fields;
  {
    Block whole;
    whole.unit = to_q(s.unit);
    for (int i = 0; i < qdim; ++i) {
      auto row = fe_zero_vec(F, qdim);
      row[i] = one;
      whole.basis.push_back(row);
    }
    pending.push_back(std::move(whole));
  }
  while (!pending.empty()) {
    Block blk = std::move(pending.back());
    pending.pop_back();
    int dim = static_cast<int>(blk.basis.size());

    std::vector<std::vector<FieldElement>> candidates;
    candidates.push_back(blk.unit);
    for (const auto& b : blk.basis) candidates.push_back(b);
    for (size_t i = 0; i < blk.basis.size(); ++i)
      for (size_t j = i + 1; j < blk.basis.size(); ++j) {
        std::vector<FieldElement> sum = blk.basis[i];
        for (int r = 0; r < qdim; ++r) sum[r] = sum[r] + blk.basis[j][r];
        candidates.push_back(std::move(sum));
      }
    // Incremental primitive-element combinations.
    {
      std::vector<FieldElement> theta = blk.basis[0];
      long limit = static_cast<long>(l) * l + 1;
      if (F->characteristic() > 0)
        limit = std::min(limit, F->characteristic());
      for (size_t bi = 1; bi < blk.basis.size(); ++bi)
        for (long c = 1; c < limit; ++c) {
          std::vector<FieldElement> g = theta;
          FieldElement cc = FieldElement::from_long(F, c);
          for (int r = 0; r < qdim; ++r)
            g[r] = g[r] + cc * blk.basis[bi][r];
          candidates.push_back(std::move(g));
        }
    }

    bool resolved = false;
    for (const auto& gamma : candidates) {
      FPoly m = minpoly_by_powers(qmul, blk.unit, gamma, dim, F);
      if (fp_deg(m) < 1) continue;
      std::vector<FPoly> parts = fp_factor_squarefree(m, F, hints);
      if (parts.size() == 1) {
        if (fp_deg(m) == dim) {
          fields.push_back(std::move(blk));
          resolved = true;
          break;
        }
        continue;
      }
      auto powers = power_list(qmul, blk.unit, gamma, fp_deg(m));
      std::vector<FieldElement> total = fe_zero_vec(F, qdim);
      for (const auto& q : parts) {
        FPoly h = fp_divrem(m, q).first;
        FpBezout bez = fp_ext_gcd(h, q);
        FPoly g = fp_divrem(fp_mul(h, bez.s), m).second;
        std::vector<FieldElement> idem = eval_fpoly(g, powers, F);
        for (int r = 0; r < qdim; ++r) total[r] = total[r] + idem[r];
        Block child;
        child.unit = idem;
        Matrix<FieldElement> rows;
        for (const auto& b : blk.basis)
          rows.push_back(qmul(idem, b));
        std::vector<int> piv = rref(rows);
        rows.resize(piv.size());
        child.basis = std::move(rows);
        pending.push_back(std::move(child));
      }
      for (int r = 0; r < qdim; ++r)
        if (total[r] != blk.unit[r])
          throw Error("partial idempotents do not sum to the block unit");
      resolved = true;
      break;
    }
    if (!resolved)
      throw Error("primitive element search failed in the reduced quotient");
  }

  // Lift each block idempotent to an exact idempotent of the algebra.
  int nu = nilpotency_index(s);
  int lift_steps = 1;
  while ((1 << lift_steps) < nu) ++lift_steps;
  ++lift_steps;
  FieldElement three = FieldElement::from_long(F, 3);
  FieldElement two = FieldElement::from_long(F, 2);
  std::vector<LocalFactor> factors;
  for (const auto& blk : fields) {
    std::vector<FieldElement> e = to_a(blk.unit);
    for (int it = 0; it < lift_steps; ++it) {
      auto e2 = multiply_elements(s, e, e);
      bool fixed = true;
      for (int r = 0; r < l; ++r)
        if (e2[r] != e[r]) fixed = false;
      if (fixed) break;
      auto e3 = multiply_elements(s, e2, e);
      for (int r = 0; r < l; ++r) e[r] = three * e2[r] - two * e3[r];
    }
    {
      auto e2 = multiply_elements(s, e, e);
      for (int r = 0; r < l; ++r)
        if (e2[r] != e[r]) throw Error("idempotent lifting did not converge");
    }

    LocalFactor fac;
    fac.idempotent = e;
    Matrix<FieldElement> image;
    for (int j = 0; j < l; ++j) {
      std::vector<FieldElement> ej = fe_zero_vec(F, l);
      ej[j] = one;
      image.push_back(multiply_elements(s, e, ej));
    }
    Echelon fb = Echelon::make(image);
    fac.factor_basis = fb.rows;
    int rk = fb.dim();

    fac.theta = Matrix<FieldElement>(rk, fe_zero_vec(F, l));
    for (int j = 0; j < l; ++j) {
      std::vector<FieldElement> ej = fe_zero_vec(F, l);
      ej[j] = one;
      auto coords = fb.coords(multiply_elements(s, e, ej));
      for (int k = 0; k < rk; ++k) fac.theta[k][j] = coords[k];
    }

    Matrix<FieldElement> nrows;
    for (const auto& n : dec.nilradical_basis)
      nrows.push_back(multiply_elements(s, e, n));
    Echelon fnil = Echelon::make(nrows);
    fac.nil_basis = fnil.rows;

    // Residue field basis: factor basis reduced modulo the block nilradical.
    Matrix<FieldElement> rrows;
    for (const auto& b : fac.factor_basis) rrows.push_back(fnil.reduce(b));
    Echelon res = Echelon::make(rrows);
    int d = res.dim();
    auto res_coords = [&](const std::vector<FieldElement>& v) {
      return res.coords(fnil.reduce(v));
    };
    std::function<std::vector<FieldElement>(const std::vector<FieldElement>&,
                                            const std::vector<FieldElement>&)>
        rmul = [&](const std::vector<FieldElement>& a,
                   const std::vector<FieldElement>& b) {
          std::vector<FieldElement> av = fe_zero_vec(F, l);
          std::vector<FieldElement> bv = fe_zero_vec(F, l);
          for (int k = 0; k < d; ++k)
            for (int r = 0; r < l; ++r) {
              av[r] = av[r] + a[k] * res.rows[k][r];
              bv[r] = bv[r] + b[k] * res.rows[k][r];
            }
          return res_coords(multiply_elements(s, av, bv));
        };
    std::vector<FieldElement> runit = res_coords(e);

    // Primitive element of the residue field: the unit first (degree-1
    // blocks then read P = x - 1), then basis rows, sums, and shifted
    // combinations.
    std::vector<std::vector<FieldElement>> candidates;
    candidates.push_back(runit);
    for (int k = 0; k < d; ++k) {
      auto v = fe_zero_vec(F, d);
      v[k] = one;
      candidates.push_back(v);
    }
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        auto v = fe_zero_vec(F, d);
        v[i] = one;
        v[j] = one;
        candidates.push_back(v);
      }
    {
      long limit = static_cast<long>(l) * l + 1;
      if (F->characteristic() > 0)
        limit = std::min(limit, F->characteristic());
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (i == j) continue;
          for (long c = 2; c < limit; ++c) {
            auto v = fe_zero_vec(F, d);
            v[i] = one;
            v[j] = FieldElement::from_long(F, c);
            candidates.push_back(v);
          }
        }
    }
    FPoly minp;
    std::vector<FieldElement> beta;
    for (const auto& gamma : candidates) {
      FPoly m = minpoly_by_powers(rmul, runit, gamma, d, F);
      if (fp_deg(m) == d) {
        minp = m;
        beta = gamma;
        break;
      }
    }
    if (minp.empty())
      throw Error("no primitive element found for a residue field");
    fac.residue_poly = minp;

    auto bpowers = power_list(rmul, runit, beta, d);
    Matrix<FieldElement> w(d, fe_zero_vec(F, d));
    for (int j = 0; j < d; ++j)
      for (int r = 0; r < d; ++r) w[r][j] = bpowers[j][r];
    auto winv = mat_inverse(w, zero, one);
    if (!winv) throw Error("power basis of the residue field is degenerate");
    fac.rho = Matrix<FieldElement>(d, fe_zero_vec(F, rk));
    for (int k = 0; k < rk; ++k) {
      auto y = mat_vec(*winv, res_coords(fac.factor_basis[k]), zero);
      for (int j = 0; j < d; ++j) fac.rho[j][k] = y[j];
    }
    fac.pi = mat_mul(fac.rho, fac.theta, zero);
    factors.push_back(std::move(fac));
  }

  // The factor the projection keeps is index 0; the rest sort by residue
  // data for determinism.
  std::stable_sort(factors.begin(), factors.end(),
                   [&](const LocalFactor& a, const LocalFactor& b) {
                     bool pa = !a.idempotent[0].is_zero();
                     bool pb = !b.idempotent[0].is_zero();
                     if (pa != pb) return pa;
                     if (a.degree() != b.degree())
                       return a.degree() < b.degree();
                     if (!fp_eq(a.residue_poly, b.residue_poly))
                       return fp_less(a.residue_poly, b.residue_poly);
                     return vec_less(a.idempotent, b.idempotent);
                   });
  if (factors.empty() || factors[0].idempotent[0].is_zero())
    throw Error("no factor carries the projection");

  // Cross-checks: orthogonal idempotents summing to the unit, and rank
  // bookkeeping.
  {
    std::vector<FieldElement> total = fe_zero_vec(F, l);
    int rank_sum = 0;
    for (const auto& fac : factors) {
      for (int r = 0; r < l; ++r) total[r] = total[r] + fac.idempotent[r];
      rank_sum += fac.local_rank();
    }
    if (total != s.unit) throw Error("idempotents do not sum to the unit");
    if (rank_sum != l) throw Error("factor ranks do not add up to the rank");
    for (size_t i = 0; i < factors.size(); ++i)
      for (size_t j = i + 1; j < factors.size(); ++j) {
        auto prod = multiply_elements(s, factors[i].idempotent,
                                      factors[j].idempotent);
        for (const auto& c : prod)
          if (!c.is_zero()) throw Error("idempotents are not orthogonal");
      }
  }
  for (const auto& fac : factors)
    if (fac.degree() != 1) dec.residue_fields_are_base = false;
  dec.factors = std::move(factors);
  return dec;
}

AssociatedOperators associated_operators(const LocalDecomposition& dec) {
  AssociatedOperators ops;
  for (const auto& fac : dec.factors) ops.alpha.push_back(fac.pi);
  return ops;
}

std::vector<Matrix<FieldElement>> splitting_endomorphisms(
    const AssociatedOperators& ops, const LocalDecomposition& dec,
    const FieldPtr& splitting_field,
    const std::vector<std::vector<FieldElement>>& roots_per_factor) {
  const FieldPtr& base = dec.scheme.field;
  if (roots_per_factor.size() + 1 != dec.factors.size())
    throw InputError("one root list per factor beyond the first is needed");
  std::function<FieldElement(const FieldElement&)> embed;
  if (same_field(base, splitting_field)) {
    embed = [](const FieldElement& c) { return c; };
  } else if (base->kind() == Field::Kind::Rationals &&
             splitting_field->kind() == Field::Kind::NumberField) {
    embed = [&](const FieldElement& c) {
      return FieldElement::from_rational(splitting_field, c.rational());
    };
  } else {
    throw InputError("splitting field does not extend the base field");
  }
  int l = dec.scheme.rank;
  FieldElement kzero = FieldElement::zero(splitting_field);
  std::vector<Matrix<FieldElement>> out;
  {
    Matrix<FieldElement> id(1, std::vector<FieldElement>(l, kzero));
    id[0][0] = FieldElement::one(splitting_field);
    out.push_back(id);
  }
  for (size_t i = 1; i < dec.factors.size(); ++i) {
    const LocalFactor& fac = dec.factors[i];
    const auto& roots = roots_per_factor[i - 1];
    int d = fac.degree();
    if (static_cast<int>(roots.size()) != d)
      throw InputError("factor needs exactly as many roots as its degree");
    for (size_t a = 0; a < roots.size(); ++a)
      for (size_t b = a + 1; b < roots.size(); ++b)
        if (roots[a] == roots[b])
          throw InputError("supplied roots are not distinct");
    for (const auto& r : roots) {
      FieldElement value = kzero;
      FieldElement power = FieldElement::one(splitting_field);
      for (const auto& c : fac.residue_poly) {
        value = value + embed(c) * power;
        power = power * r;
      }
      if (!value.is_zero())
        throw InputError("supplied value is not a root of the residue polynomial");
    }
    Matrix<FieldElement> rows;
    for (const auto& r : roots) {
      std::vector<FieldElement> row(l, kzero);
      FieldElement power = FieldElement::one(splitting_field);
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < l; ++k)
          row[k] = row[k] + power * embed(ops.alpha[i][j][k]);
        power = power * r;
      }
      rows.push_back(std::move(row));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

}  // namespace dring
