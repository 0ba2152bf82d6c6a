#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cascade_kit/generators.hpp"

namespace ck {

/// Matrix over Scalar[t]; entry (r, c) holds coefficients of t^0, t^1, ...
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int dim) : dim_(dim) {}
  int dim() const { return dim_; }
  int degree() const;
  Scalar coeff(int r, int c, int k) const;
  void add(int r, int c, int k, const Scalar& v);
  const std::map<std::pair<int, int>, std::vector<Scalar>>& entries() const { return e_; }
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  int dim_ = 0;
  std::map<std::pair<int, int>, std::vector<Scalar>> e_;
};

/// sum_k (t x)^k / k! for nilpotent x; throws std::invalid_argument otherwise.
PolyMatrix exp_nilpotent(const SparseMatrix& x);

struct Expansion {
  int order = -1;  // vanishing order k, -1 when zero up to the budget
  SymPoly leading;
};

/// Lower-left i x i minor of exp(t x) for the generic x = sum_alpha x_alpha e_alpha^T,
/// with x_alpha written through the dual identification of e_alpha.
Expansion s_i_expansion(const SystemPtr& sys, int i, int max_order = -1);

/// The product of generator symbols the leading coefficient should match.
struct ExpectedLeading {
  SymPoly product;
  std::string description;
};
ExpectedLeading expected_leading(const SystemPtr& sys, int i);

struct OracleReport {
  std::string system;
  int i = 0;
  int k_i = 1;
  int order = -1;
  int expected_order = -1;
  std::string expected;
  bool match = false;
  Scalar scalar;
  std::string detail;
  bool passed() const { return match && order == expected_order; }
};

OracleReport oracle_compare(const SystemPtr& sys, int i);

/// Compares a leading coefficient with a candidate symbol up to a nonzero scalar.
bool proportional(const SymPoly& lead, const SymPoly& candidate, Scalar* ratio = nullptr);

}  // namespace ck
