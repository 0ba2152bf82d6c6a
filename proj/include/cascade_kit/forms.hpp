#pragma once

#include <map>
#include <string>
#include <vector>

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/generators.hpp"

namespace ck {

/// f_xi = sum_k xi_k e_{beta_k}^* over the finite cascade.
LinearForm cascade_form(const RootSystem& sys, const std::vector<Scalar>& xi);

struct ScalarSequence {
  std::vector<Scalar> c;        // c_0 = 1, c_1 .. c_m
  std::vector<Scalar> s;        // s_0 = 1, s_k = xi_k evaluated at xi = 1
  std::vector<int> stated_sign;  // (-1)^(k+1), index 0 unused
  std::vector<int> antidiagonal_sign;  // (-1)^(k(k-1)/2), index 0 unused
};

/// c_k = xi_k(f_xi) for A or C, with the derived factors s_k.
ScalarSequence c_scalars(const SystemPtr& sys, const std::vector<Scalar>& xi);
/// The factors s_k alone.
std::vector<Scalar> derived_factors(const SystemPtr& sys);

/// xi(beta_k) = c_k s_{k-1} / (c_{k-1} s_k). c[0] must be 1.
/// Throws std::domain_error when some c_{k-1} vanishes or c_k = 0 for k <= m'.
std::vector<Scalar> reconstruct_xi(const SystemPtr& sys, const std::vector<Scalar>& c);

struct ProductFormula {
  Scalar value;
  std::vector<int> exponents;  // one per cascade root
};
/// prod_beta t_beta^{(mu_i, beta)/(beta, beta)}; throws on a non-integral or negative exponent.
ProductFormula eval_product_formula(const RootSystem& sys, int i, const std::vector<Scalar>& t);

/// The evaluation law for d_s = xi_{2s-1} on D of rank 2n, t over its cascade
/// in the order e1-e2, e1+e2, e3-e4, e3+e4, ...
Scalar d_s_eval(int half_rank, int s, const std::vector<Scalar>& t);

/// Root set of the polarization p for A or C.
std::vector<Root> polarization_roots(const RootSystem& sys);
/// p intersected with n_n for a truncation of the fixed infinite orders
/// (A: outside-in, C: natural). For A the excluded set is {e_a - e_b : b even, b < a}
/// in labels; printed_set = true drops only the pairs with a odd as well.
std::vector<Root> polarization_roots_infinite(const Truncation& tr, bool printed_set = false);

struct PolarizationReport {
  bool subalgebra = false;
  bool isotropic = false;
  bool maximal = false;
  int dimension = 0;
  int form_rank = 0;
  int expected_dimension = 0;
  bool passed() const { return subalgebra && isotropic && maximal; }
};
/// Rank of the skew form (x, y) -> f([x, y]) on n.
int skew_form_rank(const RootSystem& sys, const LinearForm& f);
PolarizationReport check_polarization(const RootSystem& sys, const std::vector<Root>& P, const LinearForm& f);

struct WeylPair {
  Root p;
  Root q;
  int level = 0;          // i in Delta_i Delta_{i-1}
  int observed_sign = 0;  // s in [Delta_p, Delta_q] = s Delta_i Delta_{i-1}; 0 if the identity fails
  int stated_sign = 0;    // (-1)^(i+1)
  Scalar q_scale;         // q = q_scale * Delta_q, so that [p, q] = 1 modulo J_c
};

struct WeylReport {
  std::vector<WeylPair> pairs;
  int expected_count = 0;
  bool covers_complement = false;  // the p's and q's exhaust the non-cascade roots once each
  bool identities_hold = false;    // every designated commutator is s Delta_i Delta_{i-1}
  bool vanishing_hold = false;     // every other commutator among p's and q's is zero
  bool unit_brackets = false;      // [p, q] reduces to 1 with the scalars c
  int sign_deviations = 0;         // pairs whose observed sign differs from (-1)^(i+1)
  std::string first_failure;
  bool passed() const {
    return static_cast<int>(pairs.size()) == expected_count && covers_complement && identities_hold &&
           vanishing_hold && unit_brackets;
  }
};
/// c must hold c_0 = 1 and nonzero c_k for the levels that occur.
WeylReport weyl_pairs(const SystemPtr& sys, const std::vector<Scalar>& c);

/// Symbol written in the labels of an order: monomials as sorted lists of theta roots.
using ThetaPoly = std::map<std::vector<ThetaRoot>, Scalar>;
ThetaPoly to_theta(const Truncation& tr, const SymPoly& p);

struct StabilityReport {
  bool symbols_agree = true;
  bool scalars_agree = true;
  bool cascade_agrees = true;
  std::string first_failure;
  bool passed() const { return symbols_agree && scalars_agree && cascade_agrees; }
};
/// Delta_q and c_q computed on M = {1..n} and {1..n+2} for the fixed infinite order
/// of type A (outside-in) or C (natural); xi gives the values on the infinite cascade.
StabilityReport stability(Type t, int n, const std::vector<Scalar>& xi);

}  // namespace ck
