#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dring/poly.hpp"
#include "dring/ratfun.hpp"

namespace dring {

// Term orders. Block orders put the first `elim` variables ahead of the
// rest, so a basis computed under one exposes the elimination ideal.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  int elim = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block(int elim_count) {
    return {Kind::Block, elim_count};
  }

  bool greater(const Expo& a, const Expo& b) const;
  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && elim == o.elim;
  }
};

struct Ideal {
  RingPtr ring;
  std::vector<MultiPoly> gens;
  std::optional<std::vector<MultiPoly>> basis;
  MonomialOrder order;
};

Ideal make_ideal(const RingPtr& ring, std::vector<MultiPoly> gens);

// Step budget for basis computations and reductions; DRINGKIT_BUDGET
// overrides the default of one million lead cancellations.
long default_budget();

// Leading term of f under the order; f must be nonzero.
std::pair<Expo, FieldElement> lead_term(const MultiPoly& f,
                                        const MonomialOrder& order);

// Fully reduced remainder of f modulo the basis. Each cancelled lead term
// costs one unit of *budget; BudgetError when it runs out.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order, long* budget = nullptr);

// Reduced Gröbner basis (Buchberger, normal pair selection, product and
// chain criteria). Output is lead-monic and sorted by increasing lead.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens,
                                      const MonomialOrder& order,
                                      long budget = default_budget());

// Computes and caches a basis for the requested order.
void ensure_basis(Ideal& ideal, const MonomialOrder& order,
                  long budget = default_budget());

bool ideal_member(const MultiPoly& f, Ideal& ideal,
                  long budget = default_budget());

bool equal_ideals(Ideal& a, Ideal& b, long budget = default_budget());

// Generators of I ∩ k[kept vars], returned over the ring without
// drop_vars. Unknown names in drop_vars are rejected.
Ideal elimination_ideal(const Ideal& ideal,
                        const std::vector<std::string>& drop_vars,
                        long budget = default_budget());

// True iff f vanishes on every point of V(I): 1 ∈ I + <1 - z f>.
bool radical_membership(const MultiPoly& f, const Ideal& ideal,
                        long budget = default_budget());

// Rank of the matrix d fns[i] / d x[j] over the rational function field.
// Characteristic zero only; equals trdeg of the subfield the fns generate.
int jacobian_rank(const std::vector<RationalFunction>& fns);

}  // namespace dring
