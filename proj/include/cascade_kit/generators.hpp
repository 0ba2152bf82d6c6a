#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cascade_kit/uea.hpp"

namespace ck {

using SymMatrix = std::vector<std::vector<SymPoly>>;

/// Determinant by row expansion with memoized column subsets.
SymPoly det(const SymMatrix& m, const SystemPtr& sys);
/// Pfaffian of a skew matrix of even size, Pf = sum_j (-1)^j a_{1j} Pf(minor).
SymPoly pfaffian(const SymMatrix& skew, const SystemPtr& sys);

/// The matrix U of type A (indices 1..n) or C (signed indices, storage order
/// 1..n, -n..-1). Entries are scaled root symbols.
class UMatrix {
 public:
  explicit UMatrix(SystemPtr sys);
  const SystemPtr& system() const { return sys_; }
  /// Row/column labels in U order.
  const std::vector<int>& labels() const { return labels_; }
  /// (root id, coefficient) at (r, c), if nonzero.
  std::optional<std::pair<int, Scalar>> entry(int r, int c) const;
  SymPoly sym(int r, int c) const;
  /// Minor on the given labels; rows are sorted ascending, columns in U order.
  SymPoly minor(std::vector<int> rows, std::vector<int> cols) const;
  int order(int label) const;

 private:
  SystemPtr sys_;
  std::vector<int> labels_;
};

struct CascadeLevel {
  Root alpha;
  int k = 0;
  std::vector<Root> B_alpha;
  std::vector<int> R_alpha;
  std::vector<int> C_alpha;
};

CascadeLevel cascade_level(const RootSystem& sys, const Root& alpha);

/// Symbol of Delta_alpha (A or C).
SymPoly delta_alpha_symbol(const SystemPtr& sys, const Root& alpha);
UeaElement delta_alpha(const SystemPtr& sys, const Root& alpha);

SymPoly delta_symbol(const SystemPtr& sys, int i);
/// Delta_i = sigma(xi_i) for A or C.
UeaElement delta_i(const SystemPtr& sys, int i);

/// xi_i for even i (B, D): the Pfaffian on 1..i with S_ab = e_{a+b}.
SymPoly pfaffian_symbol(const SystemPtr& sys, int i);
UeaElement p_i(const SystemPtr& sys, int i);

enum class OddReading {
  literal,   // delete the (i-s+1)-th row and column of U^i
  cofactor,  // delete row s and column i-s+1, the cofactor of the a_s slot
  adjugate,  // v^T Q v with adj(S) = v v^T on 1..i and Q the quadratic part outside 1..i
};

/// Odd generator under the given reading; literal and cofactor follow sum_s a_s det U_s^i.
SymPoly odd_formula_symbol(const SystemPtr& sys, int i, OddReading reading);
/// The bordered generator: D with n even and i = n-1, or B with n odd and i = n.
SymPoly bordered_symbol(const SystemPtr& sys, int i);
bool is_bordered(Type t, int n, int i);

/// The reading used by d_i and xi_symbol.
OddReading default_odd_reading();

struct OddGenerator {
  SymPoly symbol;
  UeaElement element;
};
/// xi_i for odd i (B, D) together with sigma(xi_i).
OddGenerator d_i(const SystemPtr& sys, int i);

/// Canonical xi_i for any type and 1 <= i <= m.
SymPoly xi_symbol(const SystemPtr& sys, int i);
/// sigma(xi_i); words directly when the factors commute.
UeaElement canonical_generator(const SystemPtr& sys, int i);
/// Short label: delta:i, p:i or d:i.
std::string generator_label(Type t, int i);

/// A(alpha) for alpha outside the cascade (A or C).
std::vector<Root> a_set(const RootSystem& sys, const Root& alpha);
bool in_cascade(const RootSystem& sys, const Root& alpha);

/// Sign s in [Delta_alpha, e_gamma] = s Delta_{alpha+gamma} as stated for gamma in A(alpha).
int commutator_expected_sign(const RootSystem& sys, const Root& alpha);

/// Exceptional partner of alpha in the commutator table, if any.
std::optional<Root> exchange_partner(const RootSystem& sys, const Root& alpha);

/// Roots whose weight is alpha+gamma, if that is a root.
std::optional<Root> root_sum(const RootSystem& sys, const Root& a, const Root& b);

}  // namespace ck
