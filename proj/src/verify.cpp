#include "cascade_kit/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "cascade_kit/linalg.hpp"
#include "cascade_kit/parallel.hpp"

namespace ck {

json to_json(const Check& c) {
  json j;
  j["id"] = c.id;
  j["system"] = c.system;
  j["identity"] = c.identity;
  j["passed"] = c.passed;
  j["data"] = c.data;
  return j;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

json Report::to_json() const {
  json j;
  j["schema"] = kSchema;
  j["passed"] = passed();
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(ck::to_json(c));
  j["checks"] = arr;
  if (const Check* f = first_failure()) j["first_failure"] = f->id;
  return j;
}

Scalar random_nonzero(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), sgn(0, 1);
  return Scalar(mpq_class((sgn(rng) ? -1 : 1) * num(rng), den(rng)));
}

std::vector<Scalar> random_kostant(Rng& rng, int m) {
  std::vector<Scalar> xi;
  for (int k = 0; k < m; ++k) xi.push_back(random_nonzero(rng));
  return xi;
}

namespace {

Check make(const std::string& id, const SystemPtr& sys, const std::string& identity) {
  Check c;
  c.id = id;
  c.system = sys ? sys->name() : "";
  c.identity = identity;
  return c;
}

void fail(Check& c, const std::string& why) {
  c.passed = false;
  if (!c.data.contains("counterexample")) c.data["counterexample"] = why;
}

json scalars(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

bool is_ac(const RootSystem& sys) { return sys.type() == Type::A || sys.type() == Type::C; }

RootCombo combo_bracket(const RootSystem& sys, int a, const RootCombo& x) {
  std::map<int, Scalar> acc;
  for (const auto& [g, c] : x)
    for (const auto& [h, d] : sys.bracket(a, g)) acc[h] += c * d;
  RootCombo out;
  for (auto& [h, v] : acc)
    if (!v.is_zero()) out.emplace_back(h, v);
  return out;
}

}  // namespace

Check check_realization(const SystemPtr& sys) {
  Check c = make("realization", sys,
                 "G x + x^T G = 0 for every root vector x; [e_a, e_b] lies on e_{a+b}; Jacobi on all triples");
  c.passed = true;
  const int N = sys->size();
  if (sys->type() != Type::A) {
    const SparseMatrix G = sys->gram();
    for (int a = 0; a < N && c.passed; ++a) {
      const SparseMatrix& x = sys->root_vector(a);
      if (!(G * x + x.transpose() * G).is_zero()) fail(c, "invariance fails at " + sys->root(a).str());
    }
  }
  int brackets = 0;
  for (int a = 0; a < N && c.passed; ++a)
    for (int b = 0; b < N && c.passed; ++b) {
      const auto& br = sys->bracket(a, b);
      auto w = sys->weight(a);
      const auto wb = sys->weight(b);
      for (size_t k = 0; k < w.size(); ++k) w[k] += wb[k];
      for (const auto& [g, v] : br)
        if (sys->weight(g) != w) fail(c, "bracket of " + sys->root(a).str() + " and " + sys->root(b).str() + " is not homogeneous");
      SparseMatrix expect(sys->dim());
      for (const auto& [g, v] : br) expect = expect + sys->root_vector(g).scaled(v);
      const SparseMatrix& xa = sys->root_vector(a);
      const SparseMatrix& xb = sys->root_vector(b);
      if (!(xa * xb - xb * xa == expect))
        fail(c, "structure constants disagree with the matrix commutator at " + sys->root(a).str() + ", " + sys->root(b).str());
      if (!br.empty()) ++brackets;
    }
  long triples = 0;
  for (int a = 0; a < N && c.passed; ++a)
    for (int b = a; b < N && c.passed; ++b)
      for (int d = b; d < N && c.passed; ++d) {
        std::map<int, Scalar> acc;
        for (const auto& [g, v] : combo_bracket(*sys, a, sys->bracket(b, d))) acc[g] += v;
        for (const auto& [g, v] : combo_bracket(*sys, b, sys->bracket(d, a))) acc[g] += v;
        for (const auto& [g, v] : combo_bracket(*sys, d, sys->bracket(a, b))) acc[g] += v;
        for (const auto& [g, v] : acc)
          if (!v.is_zero()) fail(c, "Jacobi fails at " + sys->root(a).str() + ", " + sys->root(b).str() + ", " + sys->root(d).str());
        ++triples;
      }
  c.data["roots"] = N;
  c.data["nonzero_brackets"] = brackets;
  c.data["triples"] = triples;
  return c;
}

Check check_centrality(const SystemPtr& sys, int odd_max_rank) {
  Check c = make("centrality", sys, "[sigma(xi_i), e_alpha] = 0 for every i and every positive root alpha");
  c.passed = true;
  const Type t = sys->type();
  const int n = sys->rank(), m = cascade_size(t, n);
  std::vector<int> idx;
  for (int i = 1; i <= m; ++i) {
    const bool odd_bd = (t == Type::B || t == Type::D) && i % 2 == 1;
    if (odd_bd && n > odd_max_rank) continue;
    idx.push_back(i);
  }
  std::vector<int> bad(idx.size(), -1);
  std::vector<size_t> sizes(idx.size());
  parallel_for(idx.size(), [&](size_t k) {
    const UeaElement g = canonical_generator(sys, idx[k]);
    sizes[k] = g.size();
    bad[k] = first_noncentral(g);
  });
  json gens = json::array();
  for (size_t k = 0; k < idx.size(); ++k) {
    gens.push_back({{"label", generator_label(t, idx[k])}, {"terms", sizes[k]}, {"central", bad[k] < 0}});
    if (bad[k] >= 0) fail(c, generator_label(t, idx[k]) + " fails to commute with e_" + sys->root(bad[k]).str());
  }
  c.data["generators"] = gens;
  if (static_cast<int>(idx.size()) < m) c.data["skipped_odd_above_rank"] = odd_max_rank;
  return c;
}

Check check_commutator_sweep(const SystemPtr& sys) {
  Check c = make("commutator-sweep", sys,
                 "[Delta_alpha, e_gamma] = 0 for gamma outside A(alpha) and = s Delta_{alpha+gamma} with s = +-1 inside");
  if (!is_ac(*sys)) throw std::invalid_argument("the commutator sweep is defined for A and C");
  std::vector<Root> alphas;
  for (const Root& a : sys->roots())
    if (!in_cascade(*sys, a)) alphas.push_back(a);
  struct Row {
    std::string failure;
    int zeros = 0, nonzero = 0, deviations = 0;
    json signs = json::array();
  };
  std::vector<Row> rows(alphas.size());
  parallel_for(alphas.size(), [&](size_t k) {
    const Root& a = alphas[k];
    Row& r = rows[k];
    const UeaElement D = delta_alpha(sys, a);
    const auto A = a_set(*sys, a);
    const int expected = commutator_expected_sign(*sys, a);
    for (int g = 0; g < sys->size(); ++g) {
      const Root& gamma = sys->root(g);
      const UeaElement comm = ad_gen(D, g);
      const bool inside = std::find(A.begin(), A.end(), gamma) != A.end();
      if (!inside) {
        if (!comm.is_zero() && r.failure.empty())
          r.failure = "[Delta_" + a.str() + ", e_" + gamma.str() + "] != 0 although gamma is outside A(alpha)";
        ++r.zeros;
        continue;
      }
      auto target = root_sum(*sys, a, gamma);
      if (!target) {
        if (r.failure.empty()) r.failure = a.str() + " + " + gamma.str() + " is not a root";
        continue;
      }
      const UeaElement T = delta_alpha(sys, *target);
      int s = 0;
      if (comm == T) s = 1;
      else if (comm == -T) s = -1;
      if (!s && r.failure.empty())
        r.failure = "[Delta_" + a.str() + ", e_" + gamma.str() + "] is not +-Delta_" + target->str();
      if (s && s != expected) ++r.deviations;
      ++r.nonzero;
      r.signs.push_back({{"alpha", a.str()}, {"gamma", gamma.str()}, {"observed", s}, {"stated", expected}});
    }
  });
  c.passed = true;
  int zeros = 0, nonzero = 0, deviations = 0;
  json signs = json::array();
  for (const Row& r : rows) {
    zeros += r.zeros;
    nonzero += r.nonzero;
    deviations += r.deviations;
    for (const auto& s : r.signs) signs.push_back(s);
    if (!r.failure.empty()) fail(c, r.failure);
  }
  c.data["alphas"] = alphas.size();
  c.data["zero_commutators"] = zeros;
  c.data["signed_commutators"] = nonzero;
  c.data["sign_deviations"] = deviations;
  c.data["signs"] = signs;
  return c;
}

Check check_exchange_sweep(const SystemPtr& sys) {
  Check c = make("exchange-sweep", sys,
                 "[Delta_alpha, Delta_beta] = 0 except for exchange partners, where it is s_i Delta_i Delta_{i-1}");
  if (!is_ac(*sys)) throw std::invalid_argument("the exchange sweep is defined for A and C");
  const int N = sys->size();
  std::vector<UeaElement> D(N);
  parallel_for(N, [&](size_t a) { D[a] = delta_alpha(sys, sys->root(static_cast<int>(a))); });
  const int m = cascade_size(sys->type(), sys->rank());
  std::vector<UeaElement> prod(m + 1);
  {
    std::vector<UeaElement> delta{UeaElement::constant(sys, 1)};
    for (int i = 1; i <= m; ++i) delta.push_back(delta_i(sys, i));
    for (int i = 1; i <= m; ++i) prod[i] = delta[i] * delta[i - 1];
  }
  auto partner_level = [&](int a, int b) -> int {
    const Root& ra = sys->root(a);
    const Root& rb = sys->root(b);
    for (auto [x, y] : {std::pair{ra, rb}, std::pair{rb, ra}}) {
      if (in_cascade(*sys, x)) continue;
      auto p = exchange_partner(*sys, x);
      if (p && *p == y) return cascade_level(*sys, x).k;
    }
    return 0;
  };
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) pairs.emplace_back(a, b);
  std::vector<int> level(pairs.size()), sign(pairs.size()), orient(pairs.size());
  std::vector<char> ok(pairs.size());
  parallel_for(pairs.size(), [&](size_t k) {
    auto [a, b] = pairs[k];
    level[k] = partner_level(a, b);
    // orient so that the first entry is the root carrying the lower row, as in [Delta_alpha, Delta_partner]
    const bool a_first = !level[k] || (exchange_partner(*sys, sys->root(a)) &&
                                       *exchange_partner(*sys, sys->root(a)) == sys->root(b) &&
                                       !in_cascade(*sys, sys->root(a)));
    orient[k] = a_first ? 1 : -1;
    const UeaElement comm = a_first ? commutator(D[a], D[b]) : commutator(D[b], D[a]);
    if (!level[k]) {
      ok[k] = comm.is_zero();
      return;
    }
    if (comm == prod[level[k]]) sign[k] = 1;
    else if (comm == -prod[level[k]]) sign[k] = -1;
    ok[k] = sign[k] != 0;
  });
  c.passed = true;
  std::map<int, std::set<int>> signs_by_level;
  int exceptional = 0;
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto [a, b] = pairs[k];
    if (orient[k] < 0) std::swap(a, b);
    if (!ok[k]) {
      fail(c, "[Delta_" + sys->root(a).str() + ", Delta_" + sys->root(b).str() + "] " +
                  (level[k] ? "is not +-Delta_i Delta_{i-1}" : "!= 0"));
      continue;
    }
    if (level[k]) {
      ++exceptional;
      signs_by_level[level[k]].insert(sign[k]);
    }
  }
  json by_level = json::array();
  int deviations = 0;
  for (const auto& [i, s] : signs_by_level) {
    const int stated = i % 2 ? 1 : -1;
    const bool single = s.size() == 1;
    if (!single) fail(c, "sign at level " + std::to_string(i) + " depends on the pair");
    const int observed = single ? *s.begin() : 0;
    if (observed != stated) ++deviations;
    by_level.push_back({{"i", i}, {"observed", observed}, {"stated", stated}});
  }
  c.data["pairs"] = pairs.size();
  c.data["exceptional_pairs"] = exceptional;
  c.data["signs_by_level"] = by_level;
  c.data["sign_deviations"] = deviations;
  return c;
}

namespace {

struct SpanBuilder {
  std::map<Mono, int> cols;
  int col(const Mono& m) {
    auto [it, fresh] = cols.try_emplace(m, static_cast<int>(cols.size()));
    return it->second;
  }
};

int span_rank(const std::vector<const UeaElement*>& elems, SpanBuilder& sb) {
  for (const auto* e : elems)
    for (const auto& [m, v] : e->terms()) sb.col(m);
  Echelon ech(static_cast<int>(sb.cols.size()));
  for (const auto* e : elems) {
    Vec v(sb.cols.size());
    for (const auto& [m, s] : e->terms()) v[sb.cols.at(m)] = s;
    ech.insert(std::move(v));
  }
  return ech.rank();
}

}  // namespace

Check check_center_brute(const SystemPtr& sys, int max_degree) {
  Check c = make("center-brute", sys,
                 "central elements of filtration degree <= d = span of monomials in sigma(xi_1), ..., sigma(xi_m) of degree <= d");
  const int m = cascade_size(sys->type(), sys->rank());
  std::vector<UeaElement> gens;
  std::vector<int> deg;
  for (int i = 1; i <= m; ++i) {
    gens.push_back(canonical_generator(sys, i));
    deg.push_back(gens.back().degree());
  }
  // monomials in the generators with total degree <= max_degree
  std::vector<std::pair<int, UeaElement>> words{{0, UeaElement::constant(sys, 1)}};
  std::function<void(int, int, const UeaElement&)> grow = [&](int from, int d, const UeaElement& u) {
    for (int i = from; i < m; ++i) {
      if (d + deg[i] > max_degree) continue;
      UeaElement v = u * gens[i];
      words.emplace_back(d + deg[i], v);
      grow(i, d + deg[i], v);
    }
  };
  const UeaElement one = words.front().second;
  grow(0, 0, one);
  c.passed = true;
  json levels = json::array();
  for (int d = 0; d <= max_degree; ++d) {
    const auto basis = center_basis_upto(sys, d);
    std::vector<const UeaElement*> B, G, all;
    for (const auto& b : basis) B.push_back(&b);
    for (const auto& [wd, w] : words)
      if (wd <= d) G.push_back(&w);
    all = B;
    all.insert(all.end(), G.begin(), G.end());
    SpanBuilder sb;
    const int rb = span_rank(B, sb), rg = span_rank(G, sb), ra = span_rank(all, sb);
    const bool eq = rb == rg && rg == ra;
    levels.push_back({{"degree", d}, {"center_dim", rb}, {"generated_dim", rg}, {"joint_rank", ra}, {"equal", eq}});
    if (!eq)
      fail(c, "degree " + std::to_string(d) + ": center has dimension " + std::to_string(rb) +
                  ", generator monomials span " + std::to_string(rg) + ", joint rank " + std::to_string(ra));
  }
  c.data["degrees"] = levels;
  return c;
}

Check check_independence(const SystemPtr& sys, std::uint64_t seed) {
  Check c = make("independence", sys, "rank of (d xi_i / d e_alpha) at a random rational point equals m");
  Rng rng(seed);
  const int m = cascade_size(sys->type(), sys->rank()), N = sys->size();
  std::vector<Scalar> point;
  for (int a = 0; a < N; ++a) point.push_back(random_nonzero(rng));
  std::vector<Vec> rows(m, Vec(N));
  for (int i = 1; i <= m; ++i) {
    const SymPoly x = xi_symbol(sys, i);
    for (int a = 0; a < N; ++a) rows[i - 1][a] = eval_point(x.derivative(a), point);
  }
  const int r = matrix_rank(rows, N);
  c.passed = r == m;
  c.data["rank"] = r;
  c.data["m"] = m;
  c.data["point"] = scalars(point);
  if (!c.passed) fail(c, "Jacobian rank " + std::to_string(r) + " < " + std::to_string(m));
  return c;
}

Check check_product_formula(const SystemPtr& sys, std::uint64_t seed, int samples) {
  Check c = make("product-formula", sys,
                 "xi_i(t) / prod_beta t_beta^((mu_i, beta)/(beta, beta)) is a nonzero constant on cascade forms");
  Rng rng(seed);
  const int m = cascade_size(sys->type(), sys->rank());
  c.passed = true;
  json per = json::array();
  std::vector<std::vector<Scalar>> ts;
  for (int s = 0; s < samples; ++s) ts.push_back(random_kostant(rng, m));
  for (int i = 1; i <= m; ++i) {
    const SymPoly x = xi_symbol(sys, i);
    json entry{{"i", i}};
    try {
      std::optional<Scalar> ratio;
      std::vector<int> exps;
      bool constant = true;
      for (const auto& t : ts) {
        const ProductFormula p = eval_product_formula(*sys, i, t);
        exps = p.exponents;
        const Scalar r = eval_sym(x, cascade_form(*sys, t)) / p.value;
        if (!ratio) ratio = r;
        else if (*ratio != r) constant = false;
      }
      entry["exponents"] = exps;
      entry["ratio"] = ratio->str();
      entry["constant"] = constant && !ratio->is_zero();
      if (!constant || ratio->is_zero()) fail(c, "ratio for xi_" + std::to_string(i) + " is not a nonzero constant");
    } catch (const std::domain_error& e) {
      entry["error"] = e.what();
      fail(c, "xi_" + std::to_string(i) + ": " + e.what());
    }
    per.push_back(entry);
  }
  c.data["generators"] = per;
  return c;
}

Check check_d_eval(int half_rank, std::uint64_t seed, int samples) {
  const SystemPtr sys = RootSystem::make(Type::D, 2 * half_rank);
  Check c = make("d-eval", sys, "xi_{2s-1}(t) = d_s(t) on cascade forms of D_{2n}, 1 <= s <= n");
  Rng rng(seed);
  c.passed = true;
  json per = json::array();
  for (int s = 1; s <= half_rank; ++s) {
    const SymPoly x = xi_symbol(sys, 2 * s - 1);
    bool ok = true;
    for (int k = 0; k < samples; ++k) {
      const auto t = random_kostant(rng, 2 * half_rank);
      if (eval_sym(x, cascade_form(*sys, t)) != d_s_eval(half_rank, s, t)) ok = false;
    }
    per.push_back({{"s", s}, {"equal", ok}});
    if (!ok) fail(c, "d_" + std::to_string(s) + " disagrees with direct evaluation");
  }
  c.data["half_rank"] = half_rank;
  c.data["s"] = per;
  return c;
}

Check check_roundtrip(const SystemPtr& sys, std::uint64_t seed, int count) {
  Check c = make("roundtrip", sys, "reconstruct_xi(c_scalars(xi)) = xi; a vanishing c_{k-1} is rejected");
  Rng rng(seed);
  const int m = cascade_size(sys->type(), sys->rank());
  c.passed = true;
  int good = 0;
  for (int k = 0; k < count; ++k) {
    const auto xi = random_kostant(rng, m);
    const auto sc = c_scalars(sys, xi);
    if (reconstruct_xi(sys, sc.c) == xi) ++good;
    else fail(c, "roundtrip fails at sample " + std::to_string(k));
  }
  // scalar signs against the stated (-1)^(k+1)
  const auto sc = c_scalars(sys, std::vector<Scalar>(m, Scalar(1)));
  json sign = json::array();
  int deviations = 0;
  for (int k = 1; k <= m; ++k) {
    const int derived = sc.s[k].sign();
    if (derived != sc.stated_sign[k]) ++deviations;
    sign.push_back({{"k", k}, {"s_k", sc.s[k].str()}, {"stated", sc.stated_sign[k]}, {"antidiagonal", sc.antidiagonal_sign[k]}});
  }
  // zero scalars are only forbidden on B'
  bool rejected = false;
  if (!b_prime(sys->type(), sys->rank()).empty()) {
    std::vector<Scalar> cz(m + 1, Scalar(1));
    cz[1] = Scalar();
    try {
      reconstruct_xi(sys, cz);
    } catch (const std::domain_error&) {
      rejected = true;
    }
    if (!rejected) fail(c, "c_1 = 0 was accepted");
  } else {
    rejected = true;
  }
  c.data["samples"] = count;
  c.data["exact"] = good;
  c.data["factors"] = sign;
  c.data["sign_deviations"] = deviations;
  c.data["zero_rejected"] = rejected;
  return c;
}

Check check_polarization(const SystemPtr& sys, std::uint64_t seed) {
  Check c = make("polarization", sys, "p is a subalgebra, isotropic for f([x, y]) and of dimension dim n - rank/2");
  Rng rng(seed);
  const Type t = sys->type();
  const int n = sys->rank(), m = cascade_size(t, n);
  const auto xi = random_kostant(rng, m);
  const PolarizationReport fin = ck::check_polarization(*sys, polarization_roots(*sys), cascade_form(*sys, xi));
  std::vector<int> M(n);
  for (int a = 0; a < n; ++a) M[a] = a + 1;
  const Truncation tr = truncate(t, t == Type::A ? OrderSpec::outside_in() : OrderSpec::natural(), M);
  const LinearForm f = cascade_form(*tr.sys, xi);
  const PolarizationReport inf = ck::check_polarization(*tr.sys, polarization_roots_infinite(tr), f);
  const PolarizationReport printed = ck::check_polarization(*tr.sys, polarization_roots_infinite(tr, true), f);
  auto js = [](const PolarizationReport& r) {
    return json{{"subalgebra", r.subalgebra}, {"isotropic", r.isotropic}, {"maximal", r.maximal},
                {"dimension", r.dimension}, {"expected_dimension", r.expected_dimension}, {"form_rank", r.form_rank}};
  };
  c.passed = fin.passed() && inf.passed();
  c.data["finite"] = js(fin);
  c.data["truncated_infinite"] = js(inf);
  c.data["printed_infinite_set"] = js(printed);
  if (!fin.passed()) fail(c, "finite polarization fails");
  if (!inf.passed()) fail(c, "truncated infinite polarization fails");
  return c;
}

Check check_weyl(const SystemPtr& sys, std::uint64_t seed) {
  Check c = make("weyl", sys,
                 "[p_a, q_a] = 1, [p_a, q_b] = 0 (a != b), [p_a, p_b] = [q_a, q_b] = 0 modulo Delta_k - c_k");
  Rng rng(seed);
  const int m = cascade_size(sys->type(), sys->rank());
  const auto xi = random_kostant(rng, m);
  const auto sc = c_scalars(sys, xi);
  const WeylReport w = weyl_pairs(sys, sc.c);
  c.passed = w.passed();
  json pairs = json::array();
  for (const auto& p : w.pairs)
    pairs.push_back({{"p", p.p.str()}, {"q", p.q.str()}, {"i", p.level}, {"observed_sign", p.observed_sign},
                     {"stated_sign", p.stated_sign}, {"q_scale", p.q_scale.str()}});
  c.data["pairs"] = pairs;
  c.data["count"] = w.pairs.size();
  c.data["expected_count"] = w.expected_count;
  c.data["covers_complement"] = w.covers_complement;
  c.data["vanishing"] = w.vanishing_hold;
  c.data["sign_deviations"] = w.sign_deviations;
  c.data["c"] = scalars(sc.c);
  if (!w.passed()) fail(c, w.first_failure.empty() ? "pair count or coverage mismatch" : w.first_failure);
  return c;
}

Check check_stability(Type t, int n, std::uint64_t seed) {
  Check c = make("stability", RootSystem::make(t, n),
                 "Delta_q and c_q agree on {1..n} and {1..n+2} under the order-preserving embedding");
  Rng rng(seed);
  const auto xi = random_kostant(rng, cascade_size(t, n + 2));
  const StabilityReport r = stability(t, n, xi);
  c.passed = r.passed();
  c.data["n"] = n;
  c.data["order"] = t == Type::A ? "outside-in" : "natural";
  c.data["symbols"] = r.symbols_agree;
  c.data["scalars"] = r.scalars_agree;
  c.data["cascade"] = r.cascade_agrees;
  if (!c.passed) fail(c, r.first_failure);
  return c;
}

Check check_oracle(const SystemPtr& sys) {
  Check c = make("oracle", sys, "leading coefficient of the lower-left i x i minor of exp(t x) = scalar * expected product");
  const int m = cascade_size(sys->type(), sys->rank());
  std::vector<OracleReport> reps(m);
  parallel_for(m, [&](size_t k) { reps[k] = oracle_compare(sys, static_cast<int>(k) + 1); });
  c.passed = true;
  json per = json::array();
  for (const auto& r : reps) {
    per.push_back({{"i", r.i}, {"k_i", r.k_i}, {"order", r.order}, {"expected_order", r.expected_order},
                   {"expected", r.expected}, {"match", r.match}, {"scalar", r.match ? r.scalar.str() : ""}});
    if (!r.passed())
      fail(c, "i = " + std::to_string(r.i) + ": " + (r.detail.empty() ? "order mismatch" : r.detail));
  }
  c.data["minors"] = per;
  return c;
}

Check check_cascade_goldens() {
  Check c = make("cascade-goldens", nullptr, "inductive cascades for the natural and outside-in orders");
  c.passed = true;
  json cases = json::array();
  auto expect_betas = [&](const std::string& name, Type t, const OrderSpec& o, int k,
                          const std::vector<std::string>& want) {
    const Cascade cs = cascade_steps(t, o, k);
    std::vector<std::string> got;
    for (const auto& b : cs.betas()) got.push_back(b.eps_str(o));
    const bool ok = got == want;
    cases.push_back({{"case", name}, {"got", got}, {"want", want}, {"ok", ok}});
    if (!ok) fail(c, name);
  };
  auto expect_growth = [&](const std::string& name, Type t, const OrderSpec& o, int k, int per_step) {
    const Cascade cs = cascade_steps(t, o, k);
    bool ok = !cs.exhausted && static_cast<int>(cs.steps.size()) == k;
    for (const auto& s : cs.steps) {
      std::vector<int> want(per_step * s.k);
      for (size_t a = 0; a < want.size(); ++a) want[a] = static_cast<int>(a) + 1;
      if (s.N_k != want) ok = false;
    }
    cases.push_back({{"case", name}, {"steps", cs.steps.size()}, {"exhausted", cs.exhausted}, {"ok", ok}});
    if (!ok) fail(c, name);
  };
  expect_growth("A outside-in: N exhausts Z>0", Type::A, OrderSpec::outside_in(), 6, 2);
  {
    const Cascade cs = cascade_steps(Type::A, OrderSpec::natural(), 5);
    const bool ok = cs.steps.empty() && cs.exhausted;
    cases.push_back({{"case", "A natural: N empty"}, {"steps", cs.steps.size()}, {"exhausted", cs.exhausted}, {"ok", ok}});
    if (!ok) fail(c, "A natural: N empty");
  }
  expect_growth("B natural: N exhausts Z>0", Type::B, OrderSpec::natural(), 5, 2);
  expect_growth("C natural: N exhausts Z>0", Type::C, OrderSpec::natural(), 5, 1);
  expect_growth("D natural: N exhausts Z>0", Type::D, OrderSpec::natural(), 5, 2);
  expect_betas("A outside-in cascade", Type::A, OrderSpec::outside_in(), 3, {"e1-e2", "e3-e4", "e5-e6"});
  expect_betas("B natural cascade", Type::B, OrderSpec::natural(), 3, {"e1+e2", "e3+e4", "e5+e6"});
  expect_betas("C natural cascade", Type::C, OrderSpec::natural(), 3, {"2e1", "2e2", "2e3"});
  expect_betas("D natural cascade", Type::D, OrderSpec::natural(), 3, {"e1+e2", "e3+e4", "e5+e6"});
  expect_betas("A prefix 1 then increasing", Type::A, OrderSpec::parse("prefix:1;tail:increasing"), 3, {});
  c.data["cases"] = cases;
  return c;
}

Check check_cascade_agreement(Type t, int n) {
  const SystemPtr sys = RootSystem::make(t, n);
  Check c = make("cascade-agreement", sys, "inductive cascade on {1..n} versus the closed-form cascade");
  const Cascade ind = finite_induction(t, n);
  const auto closed = finite_cascade(t, n);
  std::vector<std::string> a, b;
  for (const auto& s : ind.steps) a.push_back(s.beta.eps_str(OrderSpec::natural()));
  for (const auto& r : closed) b.push_back(r.str());
  bool ok;
  if (t == Type::A || t == Type::C) {
    ok = a == b;
  } else {
    ok = std::all_of(a.begin(), a.end(), [&](const std::string& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
  }
  std::vector<Root> roots;
  for (const auto& s : ind.steps) roots.push_back(Root::parse(s.beta.eps_str(OrderSpec::natural())));
  const bool so = strongly_orthogonal(*sys, roots) && strongly_orthogonal(*sys, closed);
  c.passed = ok && so;
  c.data["inductive"] = a;
  c.data["closed_form"] = b;
  c.data["relation"] = (t == Type::A || t == Type::C) ? "equal" : "contained";
  c.data["strongly_orthogonal"] = so;
  if (!ok) fail(c, "inductive cascade does not match");
  if (!so) fail(c, "cascade is not strongly orthogonal");
  return c;
}

Report verify_suite(const SystemPtr& sys, std::uint64_t seed) {
  Report r;
  r.checks.push_back(check_realization(sys));
  r.checks.push_back(check_centrality(sys));
  if (is_ac(*sys)) {
    r.checks.push_back(check_commutator_sweep(sys));
    r.checks.push_back(check_exchange_sweep(sys));
    if (sys->rank() <= 6) r.checks.push_back(check_stability(sys->type(), sys->rank(), seed));
  }
  return r;
}

}  // namespace ck
