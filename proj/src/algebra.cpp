#include "dring/algebra.hpp"

#include <algorithm>
#include <utility>

namespace dring {

namespace {

std::vector<FieldElement> zero_vec(const FieldPtr& f, int n) {
  return std::vector<FieldElement>(n, FieldElement::zero(f));
}

std::vector<FieldElement> basis_vec(const FieldPtr& f, int n, int i) {
  std::vector<FieldElement> v = zero_vec(f, n);
  v[i] = FieldElement::one(f);
  return v;
}

FieldElement dot(const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
  FieldElement s = FieldElement::zero(a.empty() ? Field::rationals()
                                                : a[0].field());
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

std::string idx(int i) { return std::to_string(i); }

}  // namespace

FieldElement AlgebraScheme::a(int i, int j, int k) const {
  if (i > j) std::swap(i, j);
  auto it = mul.find({i, j, k});
  return it == mul.end() ? FieldElement::zero(field) : it->second;
}

void AlgebraScheme::set_a(int i, int j, int k, const FieldElement& c) {
  if (i < 0 || j < 0 || k < 0 || i >= rank || j >= rank || k >= rank)
    throw InputError("structure constant index out of range");
  if (i > j) std::swap(i, j);
  auto it = mul.find({i, j, k});
  if (it != mul.end()) {
    if (it->second != c)
      throw InputError("conflicting values for structure constant (" + idx(i) +
                       "," + idx(j) + "," + idx(k) + ")");
    return;
  }
  if (!c.is_zero()) mul.emplace(std::array<int, 3>{i, j, k}, c);
}

bool AlgebraScheme::is_normalized() const {
  if (static_cast<int>(pi.size()) != rank) return false;
  for (int k = 0; k < rank; ++k) {
    if (k == 0 && !pi[k].is_one()) return false;
    if (k > 0 && !pi[k].is_zero()) return false;
  }
  return true;
}

AlgebraScheme make_scheme(const FieldPtr& field,
                          std::vector<std::string> labels) {
  if (labels.empty()) throw InputError("algebra needs at least one basis row");
  AlgebraScheme s;
  s.field = field;
  s.rank = static_cast<int>(labels.size());
  s.labels = std::move(labels);
  s.unit = zero_vec(field, s.rank);
  s.pi = basis_vec(field, s.rank, 0);
  return s;
}

std::vector<FieldElement> multiply_elements(
    const AlgebraScheme& s, const std::vector<FieldElement>& x,
    const std::vector<FieldElement>& y) {
  return scheme_multiply<FieldElement>(
      s, x, y, [](const FieldElement& c) { return c; },
      FieldElement::zero(s.field));
}

std::vector<std::string> validate_algebra(const AlgebraScheme& s) {
  std::vector<std::string> report;
  if (!s.field) {
    report.push_back("no coefficient field");
    return report;
  }
  if (s.rank < 1) {
    report.push_back("rank must be at least 1");
    return report;
  }
  if (static_cast<int>(s.labels.size()) != s.rank)
    report.push_back("label count differs from rank");
  if (static_cast<int>(s.unit.size()) != s.rank) {
    report.push_back("unit coordinate count differs from rank");
    return report;
  }
  if (static_cast<int>(s.pi.size()) != s.rank) {
    report.push_back("projection row length differs from rank");
    return report;
  }
  for (const auto& [key, c] : s.mul) {
    if (key[0] > key[1])
      report.push_back("structure constant key (" + idx(key[0]) + "," +
                       idx(key[1]) + "," + idx(key[2]) +
                       ") is not in canonical order");
    (void)c;
  }

  // Associativity: (eps_i eps_j) eps_k == eps_i (eps_j eps_k).
  std::vector<std::vector<FieldElement>> basis;
  for (int i = 0; i < s.rank; ++i) basis.push_back(basis_vec(s.field, s.rank, i));
  for (int i = 0; i < s.rank; ++i)
    for (int j = i; j < s.rank; ++j)
      for (int k = j; k < s.rank; ++k) {
        auto left =
            multiply_elements(s, multiply_elements(s, basis[i], basis[j]),
                              basis[k]);
        auto right = multiply_elements(
            s, basis[i], multiply_elements(s, basis[j], basis[k]));
        if (left != right)
          report.push_back("associativity fails on basis triple (" + idx(i) +
                           "," + idx(j) + "," + idx(k) + ")");
      }

  // Unit law: unit * eps_j == eps_j.
  for (int j = 0; j < s.rank; ++j) {
    auto prod = multiply_elements(s, s.unit, basis[j]);
    if (prod != basis[j])
      report.push_back("unit law fails on basis row " + idx(j));
  }

  // pi must be a unital algebra homomorphism.
  FieldElement pu = dot(s.pi, s.unit);
  if (!pu.is_one()) report.push_back("projection of the unit is not 1");
  for (int i = 0; i < s.rank; ++i)
    for (int j = i; j < s.rank; ++j) {
      auto prod = multiply_elements(s, basis[i], basis[j]);
      if (dot(s.pi, prod) != s.pi[i] * s.pi[j])
        report.push_back("projection is not multiplicative on pair (" +
                         idx(i) + "," + idx(j) + ")");
    }
  return report;
}

bool same_structure(const AlgebraScheme& a, const AlgebraScheme& b) {
  if (!same_field(a.field, b.field) || a.rank != b.rank) return false;
  if (a.unit != b.unit || a.pi != b.pi) return false;
  if (a.mul.size() != b.mul.size()) return false;
  for (const auto& [key, c] : a.mul) {
    auto it = b.mul.find(key);
    if (it == b.mul.end() || it->second != c) return false;
  }
  return true;
}

std::pair<AlgebraScheme, Matrix<FieldElement>> normalize_basis(
    const AlgebraScheme& s) {
  std::vector<std::string> report = validate_algebra(s);
  if (!report.empty())
    throw InputError("cannot normalize an invalid algebra: " + report[0]);
  FieldElement zero = FieldElement::zero(s.field);
  FieldElement one = FieldElement::one(s.field);

  // New basis: the unit, then the echelon kernel basis of pi.
  Matrix<FieldElement> psi;
  psi.push_back(s.unit);
  Matrix<FieldElement> pimat{s.pi};
  for (auto& row : kernel(pimat, zero, one)) psi.push_back(std::move(row));
  if (static_cast<int>(psi.size()) != s.rank)
    throw InputError("projection row must be nonzero");

  // Old coordinates x relate to new coordinates y by x = psi^T y.
  Matrix<FieldElement> psi_t(s.rank, zero_vec(s.field, s.rank));
  for (int i = 0; i < s.rank; ++i)
    for (int j = 0; j < s.rank; ++j) psi_t[i][j] = psi[j][i];
  auto inv = mat_inverse(psi_t, zero, one);
  if (!inv) throw InputError("unit and kernel of the projection are dependent");

  bool identity = true;
  for (int i = 0; i < s.rank && identity; ++i)
    for (int j = 0; j < s.rank && identity; ++j)
      if ((i == j && !psi[i][j].is_one()) || (i != j && !psi[i][j].is_zero()))
        identity = false;

  AlgebraScheme out;
  out.field = s.field;
  out.rank = s.rank;
  if (identity) {
    out.labels = s.labels;
  } else {
    for (int i = 0; i < s.rank; ++i) out.labels.push_back("b" + idx(i));
  }
  out.unit = basis_vec(s.field, s.rank, 0);
  out.pi = basis_vec(s.field, s.rank, 0);
  for (int i = 0; i < s.rank; ++i)
    for (int j = i; j < s.rank; ++j) {
      auto prod_old = multiply_elements(s, psi[i], psi[j]);
      auto prod_new = mat_vec(*inv, prod_old, zero);
      for (int k = 0; k < s.rank; ++k)
        if (!prod_new[k].is_zero()) out.set_a(i, j, k, prod_new[k]);
    }
  return {out, psi};
}

namespace {

void require_normalized(const AlgebraScheme& s, const char* what) {
  if (!s.is_normalized())
    throw InputError(std::string(what) +
                     " expects normalized factors; apply normalize first");
  if (static_cast<int>(s.unit.size()) != s.rank)
    throw InputError("unit coordinate count differs from rank");
}

void require_same_field(const AlgebraScheme& a, const AlgebraScheme& b) {
  if (!same_field(a.field, b.field))
    throw InputError("factors live over different coefficient fields");
}

}  // namespace

AlgebraScheme fibred_product(const AlgebraScheme& a1, const AlgebraScheme& a2) {
  require_same_field(a1, a2);
  require_normalized(a1, "fibred product");
  require_normalized(a2, "fibred product");
  int l1 = a1.rank, l2 = a2.rank;
  int rank = l1 + l2 - 1;
  std::vector<std::string> labels;
  labels.push_back("(" + a1.labels[0] + "," + a2.labels[0] + ")");
  for (int i = 1; i < l1; ++i) labels.push_back("(" + a1.labels[i] + ",0)");
  for (int j = 1; j < l2; ++j) labels.push_back("(0," + a2.labels[j] + ")");
  AlgebraScheme out = make_scheme(a1.field, std::move(labels));

  // Index map: shared row 0 -> 0, a1 row i -> i, a2 row j -> l1 - 1 + j.
  // Mixed products of pure a1 and pure a2 rows vanish, and a normalized
  // scheme never sends a product back into row 0 except for the square of
  // the shared row, which both factors record with coefficient 1.
  auto right = [&](int j) { return j == 0 ? 0 : l1 - 1 + j; };
  for (const auto& [key, c] : a1.mul)
    out.set_a(key[0], key[1], key[2], c);
  for (const auto& [key, c] : a2.mul) {
    if (key[0] == 0 && key[1] == 0 && key[2] == 0) continue;
    out.set_a(right(key[0]), right(key[1]), right(key[2]), c);
  }
  // Unit: both units share first coordinate 1.
  out.unit = zero_vec(out.field, rank);
  for (int i = 0; i < l1; ++i) out.unit[i] = a1.unit[i];
  for (int j = 1; j < l2; ++j) out.unit[right(j)] = a2.unit[j];
  return out;
}

AlgebraScheme tensor_product(const AlgebraScheme& a1, const AlgebraScheme& a2) {
  require_same_field(a1, a2);
  require_normalized(a1, "tensor product");
  require_normalized(a2, "tensor product");
  int l1 = a1.rank, l2 = a2.rank;
  std::vector<std::string> labels;
  for (int j = 0; j < l2; ++j)
    for (int i = 0; i < l1; ++i)
      labels.push_back(a1.labels[i] + "(x)" + a2.labels[j]);
  AlgebraScheme out = make_scheme(a1.field, std::move(labels));
  auto at = [&](int i, int j) { return i + j * l1; };

  for (int i1 = 0; i1 < l1; ++i1)
    for (int j1 = i1; j1 < l1; ++j1)
      for (int i2 = 0; i2 < l2; ++i2)
        for (int j2 = 0; j2 < l2; ++j2) {
          // (eps_i1 (x) eps_i2)(eps_j1 (x) eps_j2); running i1 <= j1 with
          // both orders of the second index, minus the double-counted
          // diagonal, visits each unordered pair of rows exactly once.
          if (i1 == j1 && i2 > j2) continue;
          for (int k1 = 0; k1 < l1; ++k1) {
            FieldElement c1 = a1.a(i1, j1, k1);
            if (c1.is_zero()) continue;
            for (int k2 = 0; k2 < l2; ++k2) {
              FieldElement c2 = a2.a(i2, j2, k2);
              if (c2.is_zero()) continue;
              out.set_a(at(i1, i2), at(j1, j2), at(k1, k2), c1 * c2);
            }
          }
        }
  out.unit = zero_vec(out.field, l1 * l2);
  for (int i = 0; i < l1; ++i)
    for (int j = 0; j < l2; ++j)
      out.unit[at(i, j)] = a1.unit[i] * a2.unit[j];
  // pi = pi1 (x) pi2 picks coordinate (0, 0).
  out.pi = basis_vec(out.field, l1 * l2, 0);
  return out;
}

Composition compose_algebras(const AlgebraScheme& a1, const AlgebraScheme& a2) {
  require_same_field(a1, a2);
  require_normalized(a1, "composition");
  require_normalized(a2, "composition");
  int l1 = a1.rank, l2 = a2.rank;
  Composition out;
  out.scheme = tensor_product(a1, a2);
  // Applying the outer projection coordinatewise keeps the j = 0 block.
  out.f = Matrix<FieldElement>(l1, zero_vec(a1.field, l1 * l2));
  for (int i = 0; i < l1; ++i) out.f[i][i] = FieldElement::one(a1.field);
  return out;
}

AlgebraScheme trivial_scheme(const FieldPtr& f) {
  AlgebraScheme s = make_scheme(f, {"1"});
  s.set_a(0, 0, 0, FieldElement::one(f));
  s.unit[0] = FieldElement::one(f);
  return s;
}

AlgebraScheme truncation_scheme(const FieldPtr& f, int n) {
  if (n < 0) throw InputError("truncation length must be nonnegative");
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) {
    if (i == 0)
      labels.push_back("1");
    else if (i == 1)
      labels.push_back("eta");
    else
      labels.push_back("eta^" + std::to_string(i));
  }
  AlgebraScheme s = make_scheme(f, std::move(labels));
  FieldElement one = FieldElement::one(f);
  for (int i = 0; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) s.set_a(i, j, i + j, one);
  s.unit[0] = one;
  return s;
}

AlgebraScheme dual_numbers_scheme(const FieldPtr& f) {
  return truncation_scheme(f, 1);
}

AlgebraScheme pair_scheme(const FieldPtr& f) {
  AlgebraScheme s = make_scheme(f, {"(1,0)", "(0,1)"});
  FieldElement one = FieldElement::one(f);
  s.set_a(0, 0, 0, one);
  s.set_a(1, 1, 1, one);
  s.unit[0] = one;
  s.unit[1] = one;
  return s;
}

AlgebraScheme twisted_scheme(const FieldPtr& f, const FieldElement& c) {
  AlgebraScheme s = make_scheme(f, {"1", "u"});
  FieldElement one = FieldElement::one(f);
  s.set_a(0, 0, 0, one);
  s.set_a(0, 1, 1, one);
  s.set_a(1, 1, 1, c);
  s.unit[0] = one;
  return s;
}

AlgebraScheme twisted_endo_scheme(const FieldPtr& f) {
  AlgebraScheme s = make_scheme(f, {"(1,0)", "(0,1)", "(0,eta)"});
  FieldElement one = FieldElement::one(f);
  s.set_a(0, 0, 0, one);
  s.set_a(1, 1, 1, one);
  s.set_a(1, 2, 2, one);
  s.unit[0] = one;
  s.unit[1] = one;
  return s;
}

}  // namespace dring
