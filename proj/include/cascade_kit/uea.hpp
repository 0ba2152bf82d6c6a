#pragma once

#include <map>
#include <string>
#include <vector>

#include "cascade_kit/rootsys.hpp"

namespace ck {

/// Weakly increasing sequence of root ids, one char per factor.
using Mono = std::string;
using Terms = std::map<Mono, Scalar>;

inline int factor(const Mono& m, size_t k) { return static_cast<unsigned char>(m[k]); }
inline Mono mono_of(std::initializer_list<int> ids) {
  Mono m;
  for (int i : ids) m.push_back(static_cast<char>(i));
  return m;
}

void add_scaled(Terms& dst, const Terms& src, const Scalar& c);
void add_term(Terms& dst, const Mono& m, const Scalar& c);

/// Shared representation of a finitely supported combination of monomials.
class Combination {
 public:
  Combination() = default;
  explicit Combination(SystemPtr sys) : sys_(std::move(sys)) {}
  Combination(SystemPtr sys, Terms t) : sys_(std::move(sys)), terms_(std::move(t)) {}

  const SystemPtr& system() const { return sys_; }
  const Terms& terms() const { return terms_; }
  Terms& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const Mono& m) const;
  int degree() const;
  /// Z^n weight when every monomial has the same weight; empty otherwise.
  std::vector<int> weight() const;
  bool homogeneous() const;
  std::string str() const;

 protected:
  void check_same(const Combination& o) const;
  SystemPtr sys_;
  Terms terms_;
};

std::vector<int> mono_weight(const RootSystem& sys, const Mono& m);

/// Polynomial in the symbols e_alpha, an element of S(n).
class SymPoly : public Combination {
 public:
  using Combination::Combination;
  static SymPoly constant(SystemPtr sys, const Scalar& c);
  static SymPoly var(SystemPtr sys, int id);
  static SymPoly var(SystemPtr sys, const Root& r) { return var(sys, sys->require(r)); }

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  SymPoly scaled(const Scalar& c) const;
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  /// Partial derivative with respect to e_id.
  SymPoly derivative(int id) const;
};

/// Element of U(n) in PBW normal form with respect to the root order.
class UeaElement : public Combination {
 public:
  using Combination::Combination;
  static UeaElement constant(SystemPtr sys, const Scalar& c);
  static UeaElement gen(SystemPtr sys, int id);
  static UeaElement gen(SystemPtr sys, const Root& r) { return gen(sys, sys->require(r)); }

  UeaElement operator-() const;
  UeaElement& operator+=(const UeaElement& o);
  UeaElement& operator-=(const UeaElement& o);
  friend UeaElement operator+(UeaElement a, const UeaElement& b) { return a += b; }
  friend UeaElement operator-(UeaElement a, const UeaElement& b) { return a -= b; }
  friend UeaElement operator*(const UeaElement& a, const UeaElement& b);
  UeaElement scaled(const Scalar& c) const;
  friend bool operator==(const UeaElement& a, const UeaElement& b) { return a.terms_ == b.terms_; }
};

/// Finitely supported linear form on n, given by its values f(e_alpha).
struct LinearForm {
  std::map<Root, Scalar> values;
  Scalar operator()(const Root& r) const;
  void set(const Root& r, const Scalar& v);
};

UeaElement pbw_mul(const UeaElement& a, const UeaElement& b);
/// Product of two PBW monomials in normal form.
Terms mono_mul(const RootSystem& sys, const Mono& u, const Mono& v);
/// ab - ba, computed through the derivation property of ad(a).
UeaElement commutator(const UeaElement& a, const UeaElement& b);
/// ab - ba, computed from two full products.
UeaElement commutator_direct(const UeaElement& a, const UeaElement& b);
/// [a, e_id]
UeaElement ad_gen(const UeaElement& a, int id);

UeaElement symmetrize(const SymPoly& p);
/// Reads every monomial as a word; requires pairwise commuting factors.
UeaElement commuting_words(const SymPoly& p);
bool factors_commute(const RootSystem& sys, const Mono& m);

bool is_central(const UeaElement& u);
/// Index of the first root whose generator fails to commute with u, or -1.
int first_noncentral(const UeaElement& u);

struct CenterBudget {
  int max_rank = 4;
  int max_degree = 4;
};

/// A basis of the central elements of filtration degree <= d, homogeneous in weight.
std::vector<UeaElement> center_basis_upto(const SystemPtr& sys, int max_degree,
                                          const CenterBudget& budget = {});

Scalar eval_sym(const SymPoly& p, const LinearForm& f);
/// Evaluation at a point given by one value per root id.
Scalar eval_point(const SymPoly& p, const std::vector<Scalar>& point);

/// Monomials of exact degree d in the given ids, sorted.
std::vector<Mono> monomials_of_degree(const std::vector<int>& ids, int d);

}  // namespace ck
