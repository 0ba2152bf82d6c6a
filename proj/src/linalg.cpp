#include "cascade_kit/linalg.hpp"

#include <stdexcept>

namespace ck {

void Echelon::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (c.is_zero()) continue;
    for (int k = 0; k < ncols_; ++k)
      if (!rows_[r][k].is_zero()) v[k] -= c * rows_[r][k];
  }
}

bool Echelon::insert(Vec v) {
  if (static_cast<int>(v.size()) != ncols_) throw std::invalid_argument("row length mismatch");
  reduce(v);
  int p = -1;
  for (int k = 0; k < ncols_; ++k)
    if (!v[k].is_zero()) {
      p = k;
      break;
    }
  if (p < 0) return false;
  const Scalar inv = v[p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (c.is_zero()) continue;
    for (int k = 0; k < ncols_; ++k)
      if (!v[k].is_zero()) row[k] -= c * v[k];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool Echelon::contains(Vec v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Vec> Echelon::nullspace() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    Vec x(ncols_);
    x[f] = 1;
    for (size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = -rows_[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

int matrix_rank(const std::vector<Vec>& rows, int ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

Scalar determinant(std::vector<Vec> m) {
  const size_t n = m.size();
  Scalar det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Scalar inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Scalar f = m[r][c] * inv;
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace ck
