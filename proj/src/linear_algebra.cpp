#include "nlc/linear_algebra.hpp"

#include <utility>

namespace nlc {

RowEchelon reduced_row_echelon(RationalMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) {
      if (!m[r][k].is_zero()) m[r][k] *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
  RowEchelon e = reduced_row_echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector z(cols);
    z[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      z[e.pivots[i]] = -e.rows[i][free];
    }
    basis.push_back(std::move(z));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m, std::size_t cols) {
  return reduced_row_echelon(m, cols).rows.size();
}

void RowSpace::reduce(RationalVector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Rational f = v[p];
    for (std::size_t k = p; k < cols_; ++k) {
      if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
    }
  }
}

bool RowSpace::insert(RationalVector v) {
  reduce(v);
  std::size_t p = 0;
  while (p < cols_ && v[p].is_zero()) ++p;
  if (p == cols_) return false;
  const Rational inv = Rational(1) / v[p];
  for (std::size_t k = p; k < cols_; ++k) {
    if (!v[k].is_zero()) v[k] *= inv;
  }
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Rational f = row[p];
    for (std::size_t k = p; k < cols_; ++k) {
      if (!v[k].is_zero()) row[k] -= f * v[k];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(RationalVector v) const {
  reduce(v);
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace nlc
