#include "dring/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "dring/error.hpp"
#include "dring/linalg.hpp"

namespace dring {

namespace {

// Grevlex on a segment [lo, hi) of the exponent vector. Returns
// +1 / 0 / -1 for greater / equal / less.
int segment_cmp(const Expo& a, const Expo& b, size_t lo, size_t hi) {
  unsigned ta = 0, tb = 0;
  for (size_t i = lo; i < hi; ++i) {
    ta += a[i];
    tb += b[i];
  }
  if (ta != tb) return ta > tb ? 1 : -1;
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

bool MonomialOrder::greater(const Expo& a, const Expo& b) const {
  switch (kind) {
    case Kind::Grevlex:
      return grevlex_greater(a, b);
    case Kind::Lex:
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    case Kind::Block: {
      size_t k = std::min(static_cast<size_t>(elim), a.size());
      int c = segment_cmp(a, b, 0, k);
      if (c != 0) return c > 0;
      return segment_cmp(a, b, k, a.size()) > 0;
    }
  }
  return false;
}

Ideal make_ideal(const RingPtr& ring, std::vector<MultiPoly> gens) {
  std::vector<MultiPoly> kept;
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring))
      throw InputError("ideal generator lives in a different ring");
    if (!g.is_zero()) kept.push_back(std::move(g));
  }
  return Ideal{ring, std::move(kept), std::nullopt, MonomialOrder::grevlex()};
}

long default_budget() {
  if (const char* env = std::getenv("DRINGKIT_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

std::pair<Expo, FieldElement> lead_term(const MultiPoly& f,
                                        const MonomialOrder& order) {
  if (f.is_zero()) throw Error("lead term of the zero polynomial");
  const std::pair<const Expo, FieldElement>* best = nullptr;
  for (const auto& kv : f.terms())
    if (!best || order.greater(kv.first, best->first)) best = &kv;
  return {best->first, best->second};
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order, long* budget) {
  struct Reducer {
    const MultiPoly* g;
    Expo lm;
    FieldElement lc;
  };
  std::vector<Reducer> reds;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    auto [e, c] = lead_term(g, order);
    reds.push_back({&g, std::move(e), std::move(c)});
  }
  const RingPtr& ring = f.ring();
  MultiPoly p = f;
  MultiPoly rem(ring);
  while (!p.is_zero()) {
    auto [e, c] = lead_term(p, order);
    const Reducer* hit = nullptr;
    for (const auto& rd : reds) {
      if (expo_divides(rd.lm, e)) {
        hit = &rd;
        break;
      }
    }
    MultiPoly t = MultiPoly::monomial(ring, e, c);
    if (!hit) {
      rem = rem + t;
      p = p - t;
      continue;
    }
    if (budget) {
      if (*budget <= 0)
        throw BudgetError("polynomial reduction budget exhausted");
      --*budget;
    }
    MultiPoly q =
        MultiPoly::monomial(ring, expo_sub(hit->lm, e), c / hit->lc);
    p = p - q * (*hit->g);
  }
  return rem;
}

namespace {

struct SPair {
  size_t i, j;
  Expo lcm;
};

MultiPoly make_monic(const MultiPoly& f, const MonomialOrder& order) {
  auto [e, c] = lead_term(f, order);
  (void)e;
  return f.scaled(c.inverse());
}

}  // namespace

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens,
                                      const MonomialOrder& order,
                                      long budget) {
  std::vector<MultiPoly> g;
  for (const auto& f : gens)
    if (!f.is_zero()) g.push_back(make_monic(f, order));
  if (g.empty()) return {};
  RingPtr ring = g[0].ring();
  long left = budget;

  std::vector<Expo> lm;
  for (const auto& f : g) lm.push_back(lead_term(f, order).first);

  std::vector<SPair> pending;
  auto add_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pending.push_back({i, j, expo_lcm(lm[i], lm[j])});
  };
  for (size_t j = 1; j < g.size(); ++j) add_pairs(j);

  auto is_pending = [&](size_t a, size_t b) {
    for (const auto& pr : pending)
      if ((pr.i == a && pr.j == b) || (pr.i == b && pr.j == a)) return true;
    return false;
  };

  while (!pending.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k)
      if (order.greater(pending[best].lcm, pending[k].lcm)) best = k;
    SPair pr = pending[best];
    pending.erase(pending.begin() + best);

    // Disjoint lead supports: the S-polynomial reduces to zero.
    if (expo_add(lm[pr.i], lm[pr.j]) == pr.lcm) continue;
    // Chain criterion: a third lead divides the lcm and both sub-pairs
    // were already handled.
    bool skip = false;
    for (size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (expo_divides(lm[k], pr.lcm) && !is_pending(pr.i, k) &&
          !is_pending(pr.j, k))
        skip = true;
    }
    if (skip) continue;

    FieldElement one = FieldElement::one(ring->field);
    MultiPoly s =
        MultiPoly::monomial(ring, expo_sub(lm[pr.i], pr.lcm), one) * g[pr.i] -
        MultiPoly::monomial(ring, expo_sub(lm[pr.j], pr.lcm), one) * g[pr.j];
    MultiPoly h = normal_form(s, g, order, &left);
    if (h.is_zero()) continue;
    g.push_back(make_monic(h, order));
    lm.push_back(lead_term(g.back(), order).first);
    add_pairs(g.size() - 1);
  }

  // Minimal basis: drop elements whose lead another element's lead divides.
  std::vector<bool> drop(g.size(), false);
  for (size_t i = 0; i < g.size(); ++i) {
    if (drop[i]) continue;
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j || drop[j]) continue;
      if (expo_divides(lm[j], lm[i])) {
        drop[i] = true;
        break;
      }
    }
  }
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i)
    if (!drop[i]) minimal.push_back(g[i]);

  // Reduce each element against the others.
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = normal_form(minimal[i], others, order, &left);
    if (!r.is_zero()) reduced.push_back(make_monic(r, order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const MultiPoly& a, const MultiPoly& b) {
              return order.greater(lead_term(b, order).first,
                                   lead_term(a, order).first);
            });
  return reduced;
}

void ensure_basis(Ideal& ideal, const MonomialOrder& order, long budget) {
  if (ideal.basis && ideal.order == order) return;
  ideal.basis = groebner_basis(ideal.gens, order, budget);
  ideal.order = order;
}

bool ideal_member(const MultiPoly& f, Ideal& ideal, long budget) {
  if (f.is_zero()) return true;
  if (!ideal.basis) ensure_basis(ideal, MonomialOrder::grevlex(), budget);
  long left = budget;
  return normal_form(f, *ideal.basis, ideal.order, &left).is_zero();
}

bool equal_ideals(Ideal& a, Ideal& b, long budget) {
  for (const auto& f : a.gens)
    if (!ideal_member(f, b, budget)) return false;
  for (const auto& f : b.gens)
    if (!ideal_member(f, a, budget)) return false;
  return true;
}

Ideal elimination_ideal(const Ideal& ideal,
                        const std::vector<std::string>& drop_vars,
                        long budget) {
  const RingPtr& ring = ideal.ring;
  std::set<std::string> dropping;
  for (const auto& name : drop_vars) {
    if (ring->var_index(name) < 0)
      throw InputError("cannot eliminate unknown variable '" + name + "'");
    if (!dropping.insert(name).second)
      throw InputError("duplicate variable '" + name + "' in elimination");
  }
  std::vector<std::string> kept;
  for (const auto& name : ring->vars)
    if (!dropping.count(name)) kept.push_back(name);

  std::vector<std::string> permuted = drop_vars;
  permuted.insert(permuted.end(), kept.begin(), kept.end());
  RingPtr work = make_ring(ring->field, permuted);
  std::vector<MultiPoly> work_gens;
  for (const auto& f : ideal.gens) work_gens.push_back(f.into_ring(work));

  MonomialOrder order = MonomialOrder::block(static_cast<int>(drop_vars.size()));
  std::vector<MultiPoly> basis = groebner_basis(work_gens, order, budget);

  RingPtr target = make_ring(ring->field, kept);
  std::vector<MultiPoly> out;
  for (const auto& f : basis) {
    bool free_of_dropped = true;
    for (size_t v = 0; v < drop_vars.size() && free_of_dropped; ++v)
      if (f.degree_in(static_cast<int>(v)) > 0) free_of_dropped = false;
    if (free_of_dropped) out.push_back(f.into_ring(target));
  }
  Ideal result = make_ideal(target, out);
  // The surviving elements already form a reduced basis for grevlex on
  // the kept variables.
  result.basis = result.gens;
  result.order = MonomialOrder::grevlex();
  return result;
}

bool radical_membership(const MultiPoly& f, const Ideal& ideal, long budget) {
  if (f.is_zero()) return true;
  const RingPtr& ring = ideal.ring;
  std::string fresh = "z";
  while (ring->var_index(fresh) >= 0) fresh = "_" + fresh;
  std::vector<std::string> names = ring->vars;
  names.push_back(fresh);
  RingPtr work = make_ring(ring->field, names);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.gens) gens.push_back(g.into_ring(work));
  MultiPoly z = MultiPoly::variable(work, static_cast<int>(names.size()) - 1);
  gens.push_back(MultiPoly::from_long(work, 1) - z * f.into_ring(work));
  std::vector<MultiPoly> basis =
      groebner_basis(gens, MonomialOrder::grevlex(), budget);
  for (const auto& b : basis)
    if (b.is_constant() && !b.is_zero()) return true;
  return false;
}

int jacobian_rank(const std::vector<RationalFunction>& fns) {
  if (fns.empty()) return 0;
  const RingPtr& ring = fns[0].ring();
  if (ring->field->characteristic() != 0)
    throw InputError(
        "jacobian rank requires characteristic zero coefficients");
  for (const auto& f : fns)
    if (!same_ring(f.ring(), ring))
      throw InputError("jacobian rank: mixed rings");
  size_t m = ring->vars.size();
  Matrix<RationalFunction> jac;
  for (const auto& f : fns) {
    std::vector<RationalFunction> row;
    for (size_t v = 0; v < m; ++v)
      row.push_back(f.derivative(static_cast<int>(v)));
    jac.push_back(std::move(row));
  }
  return rank(std::move(jac));
}

}  // namespace dring
