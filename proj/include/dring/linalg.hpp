#pragma once

#include <optional>
#include <vector>

#include "dring/error.hpp"

namespace dring {

// Dense exact linear algebra over any field-like type T supporting
// +, -, *, is_zero(), and inverse(). Matrices are row-major.
template <class T>
using Matrix = std::vector<std::vector<T>>;

// Reduces m to reduced row echelon form in place and returns the pivot
// columns in order.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    T inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      T f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref(m).size());
}

// Solves m x = b for one solution, free coordinates set to zero. Returns
// nullopt when the system is inconsistent. zero is the scalar 0 of T.
template <class T>
std::optional<std::vector<T>> solve(Matrix<T> m, const std::vector<T>& b,
                                    const T& zero) {
  size_t rows = m.size();
  if (rows != b.size()) throw Error("solve: shape mismatch");
  size_t cols = rows ? m[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> pivots = rref(m);
  for (size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == static_cast<int>(cols)) return std::nullopt;
  std::vector<T> x(cols, zero);
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m[k][cols];
  return x;
}

// Basis of the null space of m, one vector per row of the result.
template <class T>
Matrix<T> kernel(Matrix<T> m, const T& zero, const T& one) {
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix<T> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<T> v(cols, zero);
    v[c] = one;
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = zero - m[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Matrix product a * b.
template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Matrix<T> out(n, std::vector<T>(p, zero));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t c = 0; c < p; ++c)
        out[i][c] = out[i][c] + a[i][j] * b[j][c];
    }
  return out;
}

// Matrix-vector product m * v.
template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v,
                       const T& zero) {
  std::vector<T> out(m.size(), zero);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero())
        out[i] = out[i] + m[i][j] * v[j];
  return out;
}

// Inverse of a square matrix; nullopt when singular.
template <class T>
std::optional<Matrix<T>> mat_inverse(Matrix<T> m, const T& zero, const T& one) {
  size_t n = m.size();
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("mat_inverse: not square");
    for (size_t j = 0; j < n; ++j) m[i].push_back(i == j ? one : zero);
  }
  std::vector<int> pivots = rref(m);
  if (pivots.size() != n) return std::nullopt;
  Matrix<T> inv(n);
  for (size_t i = 0; i < n; ++i)
    inv[i].assign(m[i].begin() + n, m[i].end());
  return inv;
}

}  // namespace dring
