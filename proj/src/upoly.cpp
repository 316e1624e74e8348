#include "dring/upoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dring {

int updeg(const UPolyQ& f) { return static_cast<int>(f.size()) - 1; }

void uptrim(UPolyQ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPolyQ upadd(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ r = a;
  r.resize(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  uptrim(r);
  return r;
}

UPolyQ upsub(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ r = a;
  r.resize(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  uptrim(r);
  return r;
}

UPolyQ upmul(const UPolyQ& a, const UPolyQ& b) {
  if (a.empty() || b.empty()) return {};
  UPolyQ r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  uptrim(r);
  return r;
}

UPolyQ upscale(const UPolyQ& a, const Rational& c) {
  if (c == 0) return {};
  UPolyQ r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<UPolyQ, UPolyQ> updivrem(const UPolyQ& a, const UPolyQ& b) {
  if (b.empty()) throw InputError("univariate division by zero");
  UPolyQ rem = a, q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Rational c = rem.back() / b.back();
    q[shift] += c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    uptrim(rem);
  }
  uptrim(q);
  return {q, rem};
}

UPolyQ upderiv(const UPolyQ& f) {
  if (f.size() <= 1) return {};
  UPolyQ r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<long>(i);
  uptrim(r);
  return r;
}

UPolyQ upmonic(const UPolyQ& f) {
  if (f.empty()) return f;
  return upscale(f, 1 / f.back());
}

UPolyQ upgcd(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ r0 = a, r1 = b;
  uptrim(r0);
  uptrim(r1);
  while (!r1.empty()) {
    auto [q, r] = updivrem(r0, r1);
    (void)q;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return upmonic(r0);
}

Rational upeval(const UPolyQ& f, const Rational& x) {
  Rational acc(0);
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

namespace {

long mod_pos(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long mul_mod(long a, long b, long p) {
  return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = mod_pos(a, p);
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

void uptrim_p(UPolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPolyP upmonic_p(const UPolyP& f, long p) {
  if (f.empty()) return f;
  long inv = inv_mod(f.back(), p);
  UPolyP r = f;
  for (auto& c : r) c = mul_mod(c, inv, p);
  return r;
}

UPolyP upsub_p(const UPolyP& a, const UPolyP& b, long p) {
  UPolyP r = a;
  r.resize(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod_pos(r[i] - b[i], p);
  uptrim_p(r);
  return r;
}

UPolyP upderiv_p(const UPolyP& f, long p) {
  if (f.size() <= 1) return {};
  UPolyP r(f.size() - 1, 0);
  for (size_t i = 1; i < f.size(); ++i)
    r[i - 1] = mul_mod(f[i], static_cast<long>(i % p), p);
  uptrim_p(r);
  return r;
}

bool upoly_p_less(const UPolyP& a, const UPolyP& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

int updeg_p(const UPolyP& f) { return static_cast<int>(f.size()) - 1; }

UPolyP upmul_p(const UPolyP& a, const UPolyP& b, long p) {
  if (a.empty() || b.empty()) return {};
  UPolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = mod_pos(r[i + j] + mul_mod(a[i], b[j], p), p);
  }
  uptrim_p(r);
  return r;
}

std::pair<UPolyP, UPolyP> updivrem_p(const UPolyP& a, const UPolyP& b, long p) {
  if (b.empty()) throw InputError("univariate division by zero");
  UPolyP rem = a, q;
  uptrim_p(rem);
  if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, 0);
  long binv = inv_mod(b.back(), p);
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    long c = mul_mod(rem.back(), binv, p);
    q[shift] = mod_pos(q[shift] + c, p);
    for (size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = mod_pos(rem[shift + i] - mul_mod(c, b[i], p), p);
    uptrim_p(rem);
  }
  uptrim_p(q);
  return {q, rem};
}

UPolyP upgcd_p(const UPolyP& a, const UPolyP& b, long p) {
  UPolyP r0 = a, r1 = b;
  uptrim_p(r0);
  uptrim_p(r1);
  while (!r1.empty()) {
    auto [q, r] = updivrem_p(r0, r1, p);
    (void)q;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return upmonic_p(r0, p);
}

UPolyP uppowmod_p(const UPolyP& base, const Integer& e, const UPolyP& mod, long p) {
  UPolyP acc{1};
  UPolyP b = updivrem_p(base, mod, p).second;
  Integer n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t()))
      acc = updivrem_p(upmul_p(acc, b, p), mod, p).second;
    b = updivrem_p(upmul_p(b, b, p), mod, p).second;
    n >>= 1;
  }
  return acc;
}

std::vector<UPolyP> factor_squarefree_mod_p(const UPolyP& f_in, long p) {
  UPolyP f = upmonic_p(f_in, p);
  int n = updeg_p(f);
  if (n < 1) return {};
  if (n == 1) return {f};
  if (p > 4096) throw BudgetError("modular factorization limited to p <= 4096");
  // Berlekamp: kernel of (Frobenius - id) on GF(p)[x]/(f).
  std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
  UPolyP xp = uppowmod_p(UPolyP{0, 1}, Integer(p), f, p);
  UPolyP cur{1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= updeg_p(cur); ++j) M[j][i] = cur[j];
    M[i][i] = mod_pos(M[i][i] - 1, p);
    cur = updivrem_p(upmul_p(cur, xp, p), f, p).second;
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (M[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[rank]);
    long inv = inv_mod(M[rank][col], p);
    for (int j = 0; j < n; ++j) M[rank][j] = mul_mod(M[rank][j], inv, p);
    for (int row = 0; row < n; ++row) {
      if (row == rank || M[row][col] == 0) continue;
      long c = M[row][col];
      for (int j = 0; j < n; ++j)
        M[row][j] = mod_pos(M[row][j] - mul_mod(c, M[rank][j], p), p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<UPolyP> kernel;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    UPolyP v(n, 0);
    v[col] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = mod_pos(-M[r][col], p);
    uptrim_p(v);
    kernel.push_back(std::move(v));
  }
  size_t num_factors = kernel.size();
  std::vector<UPolyP> parts{f};
  for (const auto& v : kernel) {
    if (parts.size() >= num_factors) break;
    if (updeg_p(v) < 1) continue;  // the constant kernel vector splits nothing
    std::vector<UPolyP> next;
    for (const auto& g : parts) {
      if (updeg_p(g) <= 1 || parts.size() >= num_factors) {
        next.push_back(g);
        continue;
      }
      UPolyP rest = g;
      for (long c = 0; c < p && updeg_p(rest) > 0; ++c) {
        UPolyP d = upgcd_p(rest, upsub_p(v, UPolyP{c}, p), p);
        if (updeg_p(d) >= 1 && updeg_p(d) < updeg_p(rest)) {
          next.push_back(d);
          rest = updivrem_p(rest, d, p).first;
        }
      }
      if (updeg_p(rest) >= 1) next.push_back(upmonic_p(rest, p));
    }
    parts = std::move(next);
  }
  std::sort(parts.begin(), parts.end(), upoly_p_less);
  return parts;
}

std::vector<std::pair<UPolyP, int>> factor_mod_p(const UPolyP& f_in, long p) {
  std::map<UPolyP, int> found;
  std::vector<std::pair<UPolyP, int>> stack{{upmonic_p(f_in, p), 1}};
  while (!stack.empty()) {
    auto [f, mult] = stack.back();
    stack.pop_back();
    if (updeg_p(f) < 1) continue;
    UPolyP d = upderiv_p(f, p);
    if (d.empty()) {
      // f is a p-th power; over GF(p) coefficients are Frobenius-fixed.
      UPolyP root((f.size() - 1) / p + 1, 0);
      for (size_t i = 0; i < f.size(); i += p) root[i / p] = f[i];
      stack.push_back({root, mult * static_cast<int>(p)});
      continue;
    }
    UPolyP sq = updivrem_p(f, upgcd_p(f, d, p), p).first;
    UPolyP rest = f;
    for (const auto& u : factor_squarefree_mod_p(sq, p)) {
      int m = 0;
      while (true) {
        auto [q, r] = updivrem_p(rest, u, p);
        if (!r.empty()) break;
        rest = q;
        ++m;
      }
      if (m > 0) found[u] += m * mult;
    }
    if (updeg_p(rest) > 0) stack.push_back({rest, mult});
  }
  return {found.begin(), found.end()};
}

namespace {

using UPolyZ = std::vector<Integer>;

int updeg_z(const UPolyZ& f) { return static_cast<int>(f.size()) - 1; }

void uptrim_z(UPolyZ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPolyZ upmul_z(const UPolyZ& a, const UPolyZ& b) {
  if (a.empty() || b.empty()) return {};
  UPolyZ r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

UPolyZ upsub_z(const UPolyZ& a, const UPolyZ& b) {
  UPolyZ r = a;
  r.resize(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  uptrim_z(r);
  return r;
}

UPolyZ upmod_z(const UPolyZ& f, const Integer& m) {
  UPolyZ r = f;
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  uptrim_z(r);
  return r;
}

UPolyZ upbalance_z(const UPolyZ& f, const Integer& m) {
  UPolyZ r = upmod_z(f, m);
  for (auto& c : r) {
    if (2 * c > m) c -= m;
  }
  uptrim_z(r);
  return r;
}

// Exact division by a monic integer polynomial; nullopt-style via bool.
bool updiv_exact_monic_z(const UPolyZ& a, const UPolyZ& b, UPolyZ& q_out) {
  if (b.empty() || b.back() != 1)
    throw Error("exact division expects a monic divisor");
  UPolyZ rem = a, q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Integer(0));
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Integer c = rem.back();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    uptrim_z(rem);
  }
  if (!rem.empty()) return false;
  uptrim_z(q);
  q_out = std::move(q);
  return true;
}

// Division with divisor monic, coefficients mod m.
std::pair<UPolyZ, UPolyZ> updivrem_monic_mod(const UPolyZ& a, const UPolyZ& b,
                                             const Integer& m) {
  UPolyZ rem = upmod_z(a, m), q;
  if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, Integer(0));
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Integer c = rem.back();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      rem[shift + i] -= c * b[i];
      rem[shift + i] %= m;
      if (rem[shift + i] < 0) rem[shift + i] += m;
    }
    uptrim_z(rem);
  }
  return {upmod_z(q, m), rem};
}

UPolyZ upadd_z(const UPolyZ& a, const UPolyZ& b) {
  UPolyZ r = a;
  r.resize(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  uptrim_z(r);
  return r;
}

struct BezoutPair {
  UPolyZ g, h, s, t;  // f = g*h, s*g + t*h = 1, all mod some modulus
};

// One quadratic Hensel step: congruences mod m become congruences mod m^2.
// g stays monic.
BezoutPair hensel_step(const UPolyZ& f, const BezoutPair& in, const Integer& m) {
  Integer m2 = m * m;
  UPolyZ e = upmod_z(upsub_z(f, upmul_z(in.g, in.h)), m2);
  auto [q, r] = updivrem_monic_mod(upmul_z(in.t, e), in.g, m2);
  UPolyZ g1 = upmod_z(upadd_z(in.g, r), m2);
  UPolyZ h1 = upmod_z(
      upadd_z(in.h, upadd_z(upmul_z(in.s, e), upmul_z(in.h, q))), m2);
  if (h1.empty() || h1.back() != 1)
    throw Error("factor lifting lost monicity");
  UPolyZ b = upmod_z(
      upsub_z(upadd_z(upmul_z(in.s, g1), upmul_z(in.t, h1)), UPolyZ{Integer(1)}),
      m2);
  auto [c, d] = updivrem_monic_mod(upmul_z(in.s, b), h1, m2);
  UPolyZ s1 = upmod_z(upsub_z(in.s, d), m2);
  UPolyZ t1 = upmod_z(
      upsub_z(in.t, upadd_z(upmul_z(in.t, b), upmul_z(g1, c))), m2);
  return {g1, h1, s1, t1};
}

// Lift the modular factor list of the monic `target` from mod p to mod M
// (M = p^(2^k)), recursively via a product tree.
std::vector<UPolyZ> lift_tree(const UPolyZ& target,
                              const std::vector<UPolyP>& facs, long p,
                              const Integer& M) {
  if (facs.size() == 1) {
    return {upmod_z(target, M)};
  }
  size_t half = facs.size() / 2;
  auto prod_p = [&](size_t lo, size_t hi) {
    UPolyP r{1};
    for (size_t i = lo; i < hi; ++i) r = upmul_p(r, facs[i], p);
    return r;
  };
  UPolyP gp = prod_p(0, half), hp = prod_p(half, facs.size());
  // Bezout pair over GF(p).
  UPolyP r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = updivrem_p(r0, r1, p);
    UPolyP s2 = upsub_p(s0, upmul_p(q, s1, p), p);
    UPolyP t2 = upsub_p(t0, upmul_p(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (updeg_p(r0) != 0) throw Error("modular factors not coprime during lifting");
  long inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = mul_mod(c, inv, p);
  for (auto& c : t0) c = mul_mod(c, inv, p);
  auto z_of = [](const UPolyP& v) {
    UPolyZ r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
  };
  BezoutPair pair{z_of(gp), z_of(hp), z_of(s0), z_of(t0)};
  Integer mm(p);
  while (mm < M) {
    pair = hensel_step(upmod_z(target, mm * mm), pair, mm);
    mm *= mm;
  }
  std::vector<UPolyP> left(facs.begin(), facs.begin() + half);
  std::vector<UPolyP> right(facs.begin() + half, facs.end());
  auto lres = lift_tree(pair.g, left, p, M);
  auto rres = lift_tree(pair.h, right, p, M);
  lres.insert(lres.end(), rres.begin(), rres.end());
  return lres;
}

// Factor a monic squarefree integer polynomial into monic integer
// irreducibles (Zassenhaus).
std::vector<UPolyZ> zassenhaus_monic(const UPolyZ& f) {
  int n = updeg_z(f);
  if (n == 1) return {f};
  static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                 89, 97, 101, 103, 107, 109, 113, 127, 131};
  long p = 0;
  UPolyP fp;
  for (long cand : kPrimes) {
    UPolyP red(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      Integer r = f[i] % cand;
      red[i] = r.get_si();
      if (red[i] < 0) red[i] += cand;
    }
    uptrim_p(red);
    if (updeg_p(red) != n) continue;  // monic, cannot happen, but be safe
    UPolyP d = upderiv_p(red, cand);
    if (d.empty()) continue;
    if (updeg_p(upgcd_p(red, d, cand)) == 0) {
      p = cand;
      fp = red;
      break;
    }
  }
  if (p == 0) throw BudgetError("no suitable prime found for modular factorization");
  std::vector<UPolyP> modular = factor_squarefree_mod_p(fp, p);
  if (modular.size() == 1) return {f};

  // Coefficient bound for monic factors: 2^n * sqrt(sum a_i^2), doubled for
  // balanced representatives.
  Rational norm2(0);
  for (const auto& c : f) norm2 += Rational(c) * Rational(c);
  Integer bound(1);
  while (Rational(bound) * Rational(bound) < norm2) bound *= 2;
  Integer B = bound;
  for (int i = 0; i < n + 1; ++i) B *= 2;
  Integer M(p);
  while (M < B) M *= M;

  std::vector<UPolyZ> lifted = lift_tree(upmod_z(f, M), modular, p, M);

  // Subset recombination.
  std::vector<UPolyZ> result;
  std::vector<UPolyZ> remaining = lifted;
  UPolyZ rest = f;
  size_t take = 1;
  while (2 * take <= remaining.size()) {
    bool committed = false;
    std::vector<size_t> idx(take);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      UPolyZ cand{Integer(1)};
      for (size_t k : idx) cand = upmod_z(upmul_z(cand, remaining[k]), M);
      cand = upbalance_z(cand, M);
      UPolyZ q;
      if (updiv_exact_monic_z(rest, cand, q)) {
        result.push_back(cand);
        rest = q;
        std::vector<UPolyZ> keep;
        for (size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            keep.push_back(remaining[i]);
        remaining = std::move(keep);
        committed = true;
        break;
      }
      // advance combination
      bool advanced = false;
      for (size_t k = take; k-- > 0;) {
        if (idx[k] + (take - k) < remaining.size()) {
          ++idx[k];
          for (size_t j = k + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    if (!committed) ++take;
  }
  if (updeg_z(rest) > 0) result.push_back(rest);
  return result;
}

UPolyZ to_primitive_integer(const UPolyQ& f) {
  Integer den(1);
  for (const auto& c : f) den = lcm(den, c.get_den());
  UPolyZ z(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Rational scaled = f[i] * Rational(den);
    scaled.canonicalize();
    z[i] = scaled.get_num();
  }
  Integer g(0);
  for (const auto& c : z) g = gcd(g, c);
  if (g != 0)
    for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

UPolyQ z_to_q(const UPolyZ& f) {
  UPolyQ q(f.size());
  for (size_t i = 0; i < f.size(); ++i) q[i] = Rational(f[i]);
  return q;
}

// Irreducible monic rational factors of a squarefree rational polynomial.
std::vector<UPolyQ> factor_squarefree_rational(const UPolyQ& part) {
  UPolyZ fz = to_primitive_integer(part);
  int n = updeg_z(fz);
  if (n == 1) return {upmonic(z_to_q(fz))};
  Integer L = fz.back();
  UPolyZ fm = fz;
  if (L != 1) {
    // Monicize: fm(y) = L^(n-1) f(y/L), so fm_i = a_i * L^(n-1-i).
    fm[n] = 1;
    Integer acc(1);
    for (int i = n - 1; i >= 0; --i) {
      fm[i] = fz[i] * acc;
      acc *= L;
    }
  }
  std::vector<UPolyZ> monic_factors = zassenhaus_monic(fm);
  std::vector<UPolyQ> out;
  for (const auto& h : monic_factors) {
    if (L == 1) {
      out.push_back(z_to_q(h));
    } else {
      // Map back: g(x) = h(L*x) up to normalization.
      UPolyQ g(h.size());
      Rational acc(1);
      for (size_t i = 0; i < h.size(); ++i) {
        g[i] = Rational(h[i]) * acc;
        acc *= Rational(L);
      }
      out.push_back(upmonic(g));
    }
  }
  return out;
}

}  // namespace

std::vector<QFactor> factor_rational(const UPolyQ& f_in,
                                     const std::vector<UPolyQ>& hints,
                                     int degree_budget) {
  UPolyQ f = f_in;
  uptrim(f);
  if (f.empty()) throw InputError("cannot factor the zero polynomial");
  if (updeg(f) == 0) return {};
  f = upmonic(f);

  if (!hints.empty()) {
    std::vector<QFactor> out;
    UPolyQ rest = f;
    for (const auto& h_in : hints) {
      UPolyQ h = h_in;
      uptrim(h);
      h = upmonic(h);
      if (updeg(h) < 1) throw InputError("factor hint must be non-constant");
      int mult = 0;
      while (true) {
        auto [q, r] = updivrem(rest, h);
        if (!r.empty()) break;
        rest = q;
        ++mult;
      }
      if (mult == 0) throw InputError("factor hint does not divide the polynomial");
      out.push_back({h, mult});
    }
    if (updeg(rest) != 0) throw InputError("factor hints do not cover the polynomial");
    return out;
  }

  if (updeg(f) > degree_budget)
    throw BudgetError("univariate factorization degree budget exceeded (" +
                      std::to_string(updeg(f)) + " > " +
                      std::to_string(degree_budget) + "); pass factor hints");

  // Musser squarefree decomposition, then factor each squarefree slice.
  std::vector<UPolyQ> gs{f};
  while (updeg(gs.back()) > 0) gs.push_back(upgcd(gs.back(), upderiv(gs.back())));
  std::vector<UPolyQ> w;  // w_i = g_{i-1} / g_i
  for (size_t i = 1; i < gs.size(); ++i)
    w.push_back(updivrem(gs[i - 1], gs[i]).first);
  std::vector<QFactor> out;
  for (size_t i = 0; i + 1 <= w.size(); ++i) {
    UPolyQ part = i + 1 < w.size() ? updivrem(w[i], w[i + 1]).first : w[i];
    if (updeg(part) < 1) continue;
    for (const auto& g : factor_squarefree_rational(part))
      out.push_back({g, static_cast<int>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
    if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
    for (size_t i = a.factor.size(); i-- > 0;)
      if (a.factor[i] != b.factor[i]) return a.factor[i] < b.factor[i];
    return false;
  });
  return out;
}

}  // namespace dring
