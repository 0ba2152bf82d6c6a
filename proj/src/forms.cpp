#include "cascade_kit/forms.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "cascade_kit/linalg.hpp"
#include "cascade_kit/parallel.hpp"

namespace ck {

namespace {

void require_ac(const RootSystem& sys, const char* what) {
  if (sys.type() != Type::A && sys.type() != Type::C)
    throw std::invalid_argument(std::string(what) + " is defined for types A and C");
}

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

LinearForm cascade_form(const RootSystem& sys, const std::vector<Scalar>& xi) {
  const auto cascade = finite_cascade(sys.type(), sys.rank());
  if (xi.size() > cascade.size())
    throw std::invalid_argument("form has " + std::to_string(xi.size()) + " values but the cascade has " +
                                std::to_string(cascade.size()) + " roots");
  LinearForm f;
  for (size_t k = 0; k < xi.size(); ++k) f.set(cascade[k], xi[k]);
  return f;
}

std::vector<Scalar> derived_factors(const SystemPtr& sys) {
  require_ac(*sys, "c_k");
  const int m = cascade_size(sys->type(), sys->rank());
  const LinearForm ones = cascade_form(*sys, std::vector<Scalar>(m, Scalar(1)));
  std::vector<Scalar> s{Scalar(1)};
  for (int k = 1; k <= m; ++k) s.push_back(eval_sym(delta_symbol(sys, k), ones));
  return s;
}

ScalarSequence c_scalars(const SystemPtr& sys, const std::vector<Scalar>& xi) {
  require_ac(*sys, "c_k");
  const int m = cascade_size(sys->type(), sys->rank());
  const LinearForm f = cascade_form(*sys, xi);
  ScalarSequence out;
  out.c.push_back(Scalar(1));
  out.s = derived_factors(sys);
  out.stated_sign.push_back(0);
  out.antidiagonal_sign.push_back(0);
  for (int k = 1; k <= m; ++k) {
    out.c.push_back(eval_sym(delta_symbol(sys, k), f));
    out.stated_sign.push_back(sign_pow(k + 1));
    out.antidiagonal_sign.push_back(sign_pow(k * (k - 1) / 2));
  }
  return out;
}

std::vector<Scalar> reconstruct_xi(const SystemPtr& sys, const std::vector<Scalar>& c) {
  require_ac(*sys, "reconstruction");
  const int m = cascade_size(sys->type(), sys->rank());
  const int m_prime = static_cast<int>(b_prime(sys->type(), sys->rank()).size());
  if (static_cast<int>(c.size()) != m + 1) throw std::invalid_argument("expected c_0 .. c_" + std::to_string(m));
  if (c[0] != Scalar(1)) throw std::invalid_argument("c_0 must be 1");
  const auto s = derived_factors(sys);
  std::vector<Scalar> xi;
  for (int k = 1; k <= m; ++k) {
    if (c[k - 1].is_zero())
      throw std::domain_error("c_" + std::to_string(k - 1) + " = 0: the ideal is not centrally generated");
    if (c[k].is_zero() && k <= m_prime)
      throw std::domain_error("c_" + std::to_string(k) + " = 0: the ideal is not centrally generated");
    xi.push_back(c[k] * s[k - 1] / (c[k - 1] * s[k]));
  }
  return xi;
}

ProductFormula eval_product_formula(const RootSystem& sys, int i, const std::vector<Scalar>& t) {
  const auto cascade = finite_cascade(sys.type(), sys.rank());
  if (t.size() != cascade.size()) throw std::invalid_argument("one value per cascade root is required");
  const W0Weight mu = weight_w0_omega(sys, i);
  ProductFormula out;
  out.value = Scalar(1);
  const int n = sys.rank();
  for (size_t k = 0; k < cascade.size(); ++k) {
    const auto b = cascade[k].weight(n);
    mpq_class num = 0, den = 0;
    for (int a = 0; a < n; ++a) {
      num += mu.weight[a] * b[a];
      den += b[a] * b[a];
    }
    mpq_class r = num / den;
    r.canonicalize();
    if (r.get_den() != 1 || sgn(r) < 0)
      throw std::domain_error("exponent " + r.get_str() + " at " + cascade[k].str() + " is not a nonnegative integer");
    const int e = static_cast<int>(r.get_num().get_si());
    out.exponents.push_back(e);
    out.value *= t[k].pow(e);
  }
  return out;
}

Scalar d_s_eval(int half_rank, int s, const std::vector<Scalar>& t) {
  const int n = half_rank;
  if (n < 1) throw std::out_of_range("half rank must be positive");
  if (s < 1 || s > n) throw std::out_of_range("s must lie in 1.." + std::to_string(n));
  if (static_cast<int>(t.size()) != 2 * n) throw std::invalid_argument("t must have 2n values");
  auto diff = [&](int l) { return t[2 * (l - 1)]; };
  auto sum = [&](int l) { return t[2 * (l - 1) + 1]; };
  Scalar v(1);
  if (s < n) {
    for (int l = 1; l < s; ++l) v *= sum(l) * sum(l);
    return v * diff(s) * sum(s);
  }
  for (int l = 1; l < n; ++l) v *= sum(l);
  return v * diff(n);
}

std::vector<Root> polarization_roots(const RootSystem& sys) {
  require_ac(sys, "polarization");
  const int n = sys.rank();
  std::vector<Root> out;
  for (const Root& r : sys.roots()) {
    if (sys.type() == Type::A ? r.j <= n - r.i + 1 : r.col() < 0) out.push_back(r);
  }
  return out;
}

std::vector<Root> polarization_roots_infinite(const Truncation& tr, bool printed_set) {
  const RootSystem& sys = *tr.sys;
  require_ac(sys, "polarization");
  std::vector<Root> out;
  for (const Root& r : sys.roots()) {
    const ThetaRoot th = tr.to_theta(r);
    bool excluded;
    if (sys.type() == Type::A)
      excluded = th.j % 2 == 0 && th.j < th.i && (!printed_set || th.i % 2 == 1);
    else
      excluded = th.kind == RootKind::diff;
    if (!excluded) out.push_back(r);
  }
  return out;
}

namespace {

Scalar skew_entry(const RootSystem& sys, int a, int b, const LinearForm& f) {
  Scalar v;
  for (const auto& [g, c] : sys.bracket(a, b)) v += c * f(sys.root(g));
  return v;
}

}  // namespace

int skew_form_rank(const RootSystem& sys, const LinearForm& f) {
  const int N = sys.size();
  std::vector<Vec> rows(N, Vec(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) rows[a][b] = skew_entry(sys, a, b, f);
  return matrix_rank(rows, N);
}

PolarizationReport check_polarization(const RootSystem& sys, const std::vector<Root>& P, const LinearForm& f) {
  std::set<int> ids;
  for (const Root& r : P) ids.insert(sys.require(r));
  PolarizationReport rep;
  rep.dimension = static_cast<int>(ids.size());
  rep.subalgebra = true;
  rep.isotropic = true;
  for (int a : ids)
    for (int b : ids) {
      for (const auto& [g, c] : sys.bracket(a, b))
        if (!ids.count(g)) rep.subalgebra = false;
      if (!skew_entry(sys, a, b, f).is_zero()) rep.isotropic = false;
    }
  rep.form_rank = skew_form_rank(sys, f);
  rep.expected_dimension = sys.size() - rep.form_rank / 2;
  rep.maximal = rep.dimension == rep.expected_dimension;
  return rep;
}

WeylReport weyl_pairs(const SystemPtr& sys, const std::vector<Scalar>& c) {
  require_ac(*sys, "Weyl pairs");
  const int n = sys->rank();
  WeylReport rep;
  if (sys->type() == Type::A)
    for (int k = n - 2; k > 0; k -= 2) rep.expected_count += k;
  else
    rep.expected_count = n * (n - 1) / 2;

  for (const Root& a : sys->roots()) {
    if (in_cascade(*sys, a)) continue;
    auto q = exchange_partner(*sys, a);
    if (!q) continue;
    WeylPair w;
    w.p = a;
    w.q = *q;
    w.level = cascade_level(*sys, a).k;
    w.stated_sign = sign_pow(w.level + 1);
    rep.pairs.push_back(w);
  }

  std::multiset<Root> used;
  for (const auto& w : rep.pairs) {
    used.insert(w.p);
    used.insert(w.q);
  }
  std::multiset<Root> complement;
  for (const Root& r : sys->roots())
    if (!in_cascade(*sys, r)) complement.insert(r);
  rep.covers_complement = used == complement;

  const size_t N = rep.pairs.size();
  std::vector<UeaElement> elems(2 * N);
  parallel_for(2 * N, [&](size_t k) {
    const WeylPair& w = rep.pairs[k / 2];
    elems[k] = delta_alpha(sys, k % 2 ? w.q : w.p);
  });

  int max_level = 0;
  for (const auto& w : rep.pairs) max_level = std::max(max_level, w.level);
  std::vector<UeaElement> delta{UeaElement::constant(sys, 1)};
  for (int i = 1; i <= max_level; ++i) delta.push_back(delta_i(sys, i));

  rep.identities_hold = true;
  std::vector<int> signs(N, 0);
  parallel_for(N, [&](size_t k) {
    const int i = rep.pairs[k].level;
    const UeaElement comm = commutator(elems[2 * k], elems[2 * k + 1]);
    const UeaElement target = delta[i] * delta[i - 1];
    if (comm == target) signs[k] = 1;
    else if (comm == -target) signs[k] = -1;
  });
  for (size_t k = 0; k < N; ++k) {
    WeylPair& w = rep.pairs[k];
    w.observed_sign = signs[k];
    if (!signs[k]) {
      rep.identities_hold = false;
      if (rep.first_failure.empty())
        rep.first_failure = "[Delta_" + w.p.str() + ", Delta_" + w.q.str() + "] is not +-Delta_i Delta_{i-1}";
      continue;
    }
    if (signs[k] != w.stated_sign) ++rep.sign_deviations;
  }

  std::vector<std::pair<size_t, size_t>> others;
  for (size_t a = 0; a < 2 * N; ++a)
    for (size_t b = a + 1; b < 2 * N; ++b)
      if (!(a % 2 == 0 && b == a + 1)) others.emplace_back(a, b);
  std::vector<char> zero(others.size(), 0);
  parallel_for(others.size(), [&](size_t k) {
    zero[k] = commutator(elems[others[k].first], elems[others[k].second]).is_zero();
  });
  rep.vanishing_hold = true;
  for (size_t k = 0; k < others.size(); ++k)
    if (!zero[k]) {
      rep.vanishing_hold = false;
      if (rep.first_failure.empty()) {
        auto name = [&](size_t e) {
          const WeylPair& w = rep.pairs[e / 2];
          return (e % 2 ? "q(" : "p(") + w.p.str() + ")";
        };
        rep.first_failure = "[" + name(others[k].first) + ", " + name(others[k].second) + "] != 0";
      }
      break;
    }

  rep.unit_brackets = true;
  for (auto& w : rep.pairs) {
    if (static_cast<int>(c.size()) <= w.level) throw std::invalid_argument("c must reach c_" + std::to_string(w.level));
    if (c[w.level].is_zero() || c[w.level - 1].is_zero())
      throw std::domain_error("c_" + std::to_string(c[w.level].is_zero() ? w.level : w.level - 1) +
                              " = 0: the quotient is not a Weyl algebra");
    if (!w.observed_sign) {
      rep.unit_brackets = false;
      continue;
    }
    const Scalar k = Scalar(w.observed_sign) * c[w.level] * c[w.level - 1];
    w.q_scale = k.inverse();
    // [p, q] = q_scale * s * Delta_i Delta_{i-1}, and Delta_i acts by c_i
    if (w.q_scale * k != Scalar(1)) rep.unit_brackets = false;
  }
  return rep;
}

ThetaPoly to_theta(const Truncation& tr, const SymPoly& p) {
  ThetaPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<ThetaRoot> key;
    for (size_t k = 0; k < m.size(); ++k) key.push_back(tr.to_theta(tr.sys->root(factor(m, k))));
    std::sort(key.begin(), key.end());
    out[key] += c;
  }
  return out;
}

StabilityReport stability(Type t, int n, const std::vector<Scalar>& xi) {
  if (t != Type::A && t != Type::C) throw std::invalid_argument("stability is defined for A and C");
  const OrderSpec order = t == Type::A ? OrderSpec::outside_in() : OrderSpec::natural();
  auto range = [](int k) {
    std::vector<int> M(k);
    for (int a = 0; a < k; ++a) M[a] = a + 1;
    return M;
  };
  const Truncation small = truncate(t, order, range(n));
  const Truncation large = truncate(t, order, range(n + 2));
  const int m1 = cascade_size(t, n), m2 = cascade_size(t, n + 2);
  if (static_cast<int>(xi.size()) < m2)
    throw std::invalid_argument("xi needs " + std::to_string(m2) + " values");
  StabilityReport rep;

  const auto infinite = cascade_steps(t, order, m2).betas();
  for (const Truncation* tr : {&small, &large}) {
    const auto fin = finite_cascade(t, tr->sys->rank());
    for (size_t k = 0; k < fin.size(); ++k)
      if (k >= infinite.size() || !(tr->to_theta(fin[k]) == infinite[k])) {
        rep.cascade_agrees = false;
        if (rep.first_failure.empty())
          rep.first_failure = "cascade root " + std::to_string(k + 1) + " of " + tr->sys->name() + " differs";
      }
  }

  const auto c1 = c_scalars(small.sys, {xi.begin(), xi.begin() + m1}).c;
  const auto c2 = c_scalars(large.sys, {xi.begin(), xi.begin() + m2}).c;
  for (int q = 1; q <= m1; ++q) {
    if (to_theta(small, delta_symbol(small.sys, q)) != to_theta(large, delta_symbol(large.sys, q))) {
      rep.symbols_agree = false;
      if (rep.first_failure.empty()) rep.first_failure = "Delta_" + std::to_string(q) + " changes from n to n+2";
    }
    if (c1[q] != c2[q]) {
      rep.scalars_agree = false;
      if (rep.first_failure.empty()) rep.first_failure = "c_" + std::to_string(q) + " changes from n to n+2";
    }
  }
  return rep;
}

}  // namespace ck
