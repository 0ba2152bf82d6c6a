#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cascade_kit/scalar.hpp"

namespace ck {

enum class Type { A, B, C, D };

char type_char(Type t);
Type parse_type(const std::string& s);

enum class RootKind { diff, sum, short_, long_ };

/// Positive root e_i - e_j, e_i + e_j (i < j), e_i (B) or 2e_i (C).
struct Root {
  RootKind kind = RootKind::diff;
  int i = 0;
  int j = 0;

  static Root diff(int i, int j) { return {RootKind::diff, i, j}; }
  static Root sum(int i, int j) { return {RootKind::sum, i, j}; }
  static Root short_(int i) { return {RootKind::short_, i, 0}; }
  static Root long_(int i) { return {RootKind::long_, i, 0}; }

  int row() const { return i; }
  /// Column index; short roots sit in column 0.
  int col() const;

  std::vector<int> weight(int n) const;
  std::string str() const;
  static Root parse(const std::string& s);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

const char* kind_name(RootKind k);

/// Sparse square matrix indexed by storage positions.
class SparseMatrix {
 public:
  using Key = std::pair<int, int>;
  SparseMatrix() = default;
  explicit SparseMatrix(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<Key, Scalar>& entries() const { return e_; }
  Scalar at(int r, int c) const;
  void add(int r, int c, const Scalar& v);
  bool is_zero() const { return e_.empty(); }

  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& s) const;
  SparseMatrix transpose() const;
  friend bool operator==(const SparseMatrix& x, const SparseMatrix& y) {
    return x.dim_ == y.dim_ && x.e_ == y.e_;
  }

 private:
  int dim_ = 0;
  std::map<Key, Scalar> e_;
};

using RootCombo = std::vector<std::pair<int, Scalar>>;

struct PbwCache;

/// Positive roots of A_{n-1}, B_n, C_n or D_n with their matrix realization
/// and memoized structure constants. Immutable after construction.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> make(Type t, int n);

  Type type() const { return type_; }
  int rank() const { return n_; }
  std::string name() const;

  const std::vector<Root>& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const Root& root(int id) const { return roots_.at(id); }
  /// Index in the positive-root order, or -1.
  int index(const Root& r) const;
  int require(const Root& r) const;
  bool contains(const Root& r) const { return index(r) >= 0; }

  /// Size of the natural representation.
  int dim() const;
  /// Storage position of a signed basis index (1..n, 0 for B, -n..-1).
  int pos(int signed_index) const;
  /// Signed basis indices in storage order.
  std::vector<int> basis_labels() const;

  const SparseMatrix& root_vector(int id) const { return vectors_.at(id); }
  /// [e_a, e_b] in the root basis.
  const RootCombo& bracket(int a, int b) const { return table_[a * size() + b]; }
  /// Expresses a matrix in the root basis; throws on nonzero residual.
  RootCombo decompose(const SparseMatrix& m) const;

  std::vector<int> weight(int id) const { return roots_.at(id).weight(n_); }
  Scalar dual_scale(int id) const;
  /// Gram matrix of the invariant bilinear form (B/C/D).
  SparseMatrix gram() const;

  /// Lazily created product cache for U(n); guarded internally.
  PbwCache& pbw_cache() const;

 private:
  RootSystem(Type t, int n);
  Type type_;
  int n_;
  std::vector<Root> roots_;
  std::map<Root, int> ids_;
  std::vector<SparseMatrix> vectors_;
  std::vector<SparseMatrix::Key> keys_;
  std::vector<RootCombo> table_;
  mutable std::once_flag cache_once_;
  mutable std::shared_ptr<PbwCache> cache_;
};

using SystemPtr = std::shared_ptr<const RootSystem>;

/// Number of cascade roots m for a finite system.
int cascade_size(Type t, int n);
/// The integers k_i, 1 <= i <= m.
int k_index(Type t, int n, int i);

struct W0Weight {
  std::vector<mpq_class> weight;
  int k = 1;
};

/// (1 - w0) varpi_i / k_i together with k_i.
W0Weight weight_w0_omega(const RootSystem& sys, int i);

std::vector<Root> positive_roots(Type t, int n);
SparseMatrix root_vector(const RootSystem& sys, const Root& a);
std::map<Root, Scalar> bracket_basis(const RootSystem& sys, const Root& a, const Root& b);
Scalar dual_scale(const RootSystem& sys, const Root& a);

}  // namespace ck
