#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cascade_kit/forms.hpp"
#include "cascade_kit/json_io.hpp"
#include "cascade_kit/oracle.hpp"

namespace ck {

struct Check {
  std::string id;
  std::string system;
  std::string identity;  // the identity being checked, in plain notation
  bool passed = false;
  json data = json::object();
};

json to_json(const Check& c);

struct Report {
  std::vector<Check> checks;
  bool passed() const;
  /// First failing check, or nullptr.
  const Check* first_failure() const;
  json to_json() const;
};

using Rng = std::mt19937_64;
/// Nonzero rational with numerator in [-9, 9] and denominator in [1, 5].
Scalar random_nonzero(Rng& rng);
std::vector<Scalar> random_kostant(Rng& rng, int m);

/// Invariance under the bilinear form (B, C, D), closure and homogeneity of brackets, Jacobi on all triples.
Check check_realization(const SystemPtr& sys);
/// Every canonical generator is central; odd B/D generators only up to odd_max_rank.
Check check_centrality(const SystemPtr& sys, int odd_max_rank = 4);
/// [Delta_alpha, e_gamma] for alpha off the cascade (A, C).
Check check_commutator_sweep(const SystemPtr& sys);
/// [Delta_alpha, Delta_beta] for all pairs (A, C).
Check check_exchange_sweep(const SystemPtr& sys);
/// Central elements of degree <= d against monomials in the generators (A, C).
Check check_center_brute(const SystemPtr& sys, int max_degree);
/// Jacobian of the generator symbols has full rank at a random rational point.
Check check_independence(const SystemPtr& sys, std::uint64_t seed);
/// xi_i(t) / prod t_beta^r is one nonzero constant over random cascade forms.
Check check_product_formula(const SystemPtr& sys, std::uint64_t seed, int samples = 3);
/// Direct evaluation of the odd D generators against d_s_eval on D of rank 2h.
Check check_d_eval(int half_rank, std::uint64_t seed, int samples = 3);
/// reconstruct_xi(c_scalars(xi)) = xi for random Kostant forms, and rejection of zero scalars.
Check check_roundtrip(const SystemPtr& sys, std::uint64_t seed, int count = 50);
/// Finite polarization and the truncated infinite one at a random Kostant form.
Check check_polarization(const SystemPtr& sys, std::uint64_t seed);
Check check_weyl(const SystemPtr& sys, std::uint64_t seed);
Check check_stability(Type t, int n, std::uint64_t seed);
Check check_oracle(const SystemPtr& sys);
/// The worked infinite-order examples.
Check check_cascade_goldens();
/// The inductive cascade against the closed form at rank n: equal for A, C, contained for B, D.
Check check_cascade_agreement(Type t, int n);

/// Realization, centrality and, for A and C, both sweeps and stability.
Report verify_suite(const SystemPtr& sys, std::uint64_t seed);

}  // namespace ck
