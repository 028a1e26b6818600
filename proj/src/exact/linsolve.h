#pragma once
// Dense exact linear algebra over a field (Rational or CycNum): reduced row
// echelon form plus the three consumers used in this project -- solve with
// uniqueness reporting, nullspace bases, and rank.

#include <cstddef>
#include <vector>

#include "exact/cyclotomic.h"

namespace discmf {

inline Rational field_inv(const Rational& x) { return Rational(1) / x; }
inline CycNum field_inv(const CycNum& x) { return x.inverse(); }
inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const CycNum& x) { return x.is_zero(); }

template <typename F>
F field_one() {
  return F(1);
}

template <typename F>
using DenseMatrix = std::vector<std::vector<F>>;

// In-place Gauss-Jordan; returns the pivot column of each pivot row.
template <typename F>
std::vector<size_t> rref(DenseMatrix<F>& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && field_is_zero(a[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    F inv = field_inv(a[r][c]);
    for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || field_is_zero(a[i][c])) continue;
      F f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename F>
size_t rank(DenseMatrix<F> a) {
  return rref(a).size();
}

enum class SolveStatus { kUnique, kNoSolution, kAmbiguous };

template <typename F>
struct SolveResult {
  SolveStatus status;
  std::vector<F> x;  // meaningful only when status == kUnique
};

// Solve a * x = b for a single right-hand side.
template <typename F>
SolveResult<F> solve(const DenseMatrix<F>& a, const std::vector<F>& b) {
  if (a.empty()) {
    for (const F& v : b)
      if (!field_is_zero(v)) return {SolveStatus::kNoSolution, {}};
    return {SolveStatus::kUnique, {}};
  }
  const size_t rows = a.size(), cols = a[0].size();
  DenseMatrix<F> aug(rows, std::vector<F>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return {SolveStatus::kNoSolution, {}};
  if (pivots.size() < cols) return {SolveStatus::kAmbiguous, {}};
  std::vector<F> x(cols);
  for (size_t i = 0; i < cols; ++i) x[i] = aug[i][cols];
  return {SolveStatus::kUnique, std::move(x)};
}

// Basis of the right nullspace of a.
template <typename F>
DenseMatrix<F> nullspace(DenseMatrix<F> a, size_t cols) {
  std::vector<size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  DenseMatrix<F> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<F> v(cols, F());
    v[fc] = field_one<F>();
    basis.push_back(std::move(v));
  }
  // fill pivot coordinates from the reduced rows
  size_t bi = 0;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    for (size_t r = 0; r < pivots.size(); ++r) basis[bi][pivots[r]] = F() - a[r][fc];
    ++bi;
  }
  return basis;
}

}  // namespace discmf
