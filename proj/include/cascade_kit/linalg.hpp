#pragma once

#include <vector>

#include "cascade_kit/scalar.hpp"

namespace ck {

using Vec = std::vector<Scalar>;

/// Incremental reduced row echelon form over Q(sqrt 2).
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}
  /// Reduces v against the basis; adds it and returns true when independent.
  bool insert(Vec v);
  /// True iff v lies in the row span.
  bool contains(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  /// Basis of {x : r.x = 0 for every row r}.
  std::vector<Vec> nullspace() const;

 private:
  void reduce(Vec& v) const;
  int ncols_;
  std::vector<Vec> rows_;   // normalized, pivot entry 1, fully reduced
  std::vector<int> pivots_;
};

int matrix_rank(const std::vector<Vec>& rows, int ncols);

/// Determinant by fraction-free elimination with pivoting.
Scalar determinant(std::vector<Vec> m);

}  // namespace ck
