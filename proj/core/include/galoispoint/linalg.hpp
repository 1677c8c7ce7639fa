#pragma once

// Dense Gaussian elimination over an exact field.

#include <optional>
#include <vector>

#include "galoispoint/error.hpp"

namespace gp {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct RowEchelon {
  Matrix<F> rref;
  std::vector<std::size_t> pivot_cols;
};

template <class F>
RowEchelon<F> row_reduce(Matrix<F> a) {
  RowEchelon<F> out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const F inv = F(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const F factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rref = std::move(a);
  return out;
}

/// Basis of {v : a v = 0}; one vector per free column, with a 1 in that column.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& a, std::size_t cols) {
  RowEchelon<F> re = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : re.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < re.pivot_cols.size(); ++i) v[re.pivot_cols[i]] = -re.rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique solution of a x = b for square invertible a; nullopt if singular.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  const std::size_t n = a.size();
  Matrix<F> aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  RowEchelon<F> re = row_reduce(std::move(aug));
  if (re.pivot_cols.size() != n || re.pivot_cols.back() != n - 1) return std::nullopt;
  std::vector<F> x(n, F(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = re.rref[i][n];
  return x;
}

}  // namespace gp
