#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cascade_kit/rootsys.hpp"

namespace ck {

enum class TailRule { increasing, decreasing, outside_in };

/// Linear order on the weights theta_i, i >= 1: an explicit prefix on top,
/// followed by the remaining indices arranged by a tail rule.
/// A negative prefix entry -i means theta_i = -e_i (types B, C, D).
struct OrderSpec {
  std::vector<int> prefix;
  TailRule tail = TailRule::increasing;

  static OrderSpec natural() { return {}; }
  static OrderSpec outside_in() { return {{}, TailRule::outside_in}; }
  /// "natural", "outside-in", "prefix:1,3,5;tail:decreasing".
  static OrderSpec parse(const std::string& dsl);
  std::string str() const;

  /// +1 if theta_i = e_i, -1 if theta_i = -e_i.
  int sign(int i) const;
  /// True iff theta_a is above theta_b.
  bool higher(int a, int b) const;
  /// Index at 1-based position t of the tail.
  int tail_at(int t) const;
  int tail_position(int a) const;
  bool in_prefix(int a) const;
};

/// Problems with an order for a given type; empty when valid.
std::vector<std::string> validate_order(Type t, const OrderSpec& o);

/// Root written in theta coordinates: theta_i - theta_j, theta_i + theta_j
/// (theta_i above theta_j), theta_i, or 2 theta_i.
struct ThetaRoot {
  RootKind kind = RootKind::diff;
  int i = 0;
  int j = 0;
  std::string str() const;
  /// The same root in epsilon coordinates as a string, e.g. "e1-e2".
  std::string eps_str(const OrderSpec& o) const;
  friend bool operator==(const ThetaRoot&, const ThetaRoot&) = default;
  friend auto operator<=>(const ThetaRoot&, const ThetaRoot&) = default;
};

struct CascadeStep {
  int k = 0;
  std::vector<int> N_k;
  ThetaRoot beta;
};

struct Cascade {
  std::vector<CascadeStep> steps;
  bool exhausted = false;
  std::vector<ThetaRoot> betas() const;
};

Cascade cascade_steps(Type t, const OrderSpec& order, int k_max);

/// The same induction run on the finite set {1..n} with e_1 > ... > e_n (> 0).
Cascade finite_induction(Type t, int n);

std::vector<Root> finite_cascade(Type t, int n);
std::vector<Root> b_prime(Type t, int n);

/// Finite system Phi_{|M|} with the order-preserving embedding e_p -> theta_{a_p}.
struct Truncation {
  SystemPtr sys;
  OrderSpec order;
  std::vector<int> labels;  // a_1 .. a_n, theta_{a_1} above ... above theta_{a_n}

  ThetaRoot to_theta(const Root& r) const;
  /// Inverse of to_theta; throws when the root is not inside Phi_M.
  Root to_finite(const ThetaRoot& r) const;
  int position(int label) const;
};

Truncation truncate(Type t, const OrderSpec& order, std::vector<int> M);

/// True iff neither the sum nor the difference of any two roots is a root.
bool strongly_orthogonal(const RootSystem& sys, const std::vector<Root>& roots);

}  // namespace ck
