#include "cascade_kit/uea.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "cascade_kit/linalg.hpp"
#include "cascade_kit/parallel.hpp"

namespace ck {

struct PbwCache {
  std::mutex mu;
  std::unordered_map<std::string, Terms> gen;
};

PbwCache& RootSystem::pbw_cache() const {
  std::call_once(cache_once_, [this] { cache_ = std::make_shared<PbwCache>(); });
  return *cache_;
}

void add_term(Terms& dst, const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = dst.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

void add_scaled(Terms& dst, const Terms& src, const Scalar& c) {
  if (c.is_zero()) return;
  const bool unit = c == Scalar(1);
  for (const auto& [m, v] : src) add_term(dst, m, unit ? v : v * c);
}

namespace {

Mono push(Mono m, int g) {
  m.push_back(static_cast<char>(g));
  return m;
}

void mul_gen_into(const RootSystem& sys, const Mono& u, int g, const Scalar& c, Terms& dst);

const Terms& mul_gen_cached(const RootSystem& sys, const Mono& u, int g) {
  PbwCache& cache = sys.pbw_cache();
  const std::string key = push(u, g);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.gen.find(key);
    if (it != cache.gen.end()) return it->second;
  }
  // u = u' x with x > g:  u' x g = (u' g) x + u' [x, g]
  Terms res;
  const int x = factor(u, u.size() - 1);
  const Mono head = u.substr(0, u.size() - 1);
  Terms left;
  mul_gen_into(sys, head, g, Scalar(1), left);
  for (const auto& [w, c] : left) mul_gen_into(sys, w, x, c, res);
  for (const auto& [gamma, c] : sys.bracket(x, g)) mul_gen_into(sys, head, gamma, c, res);
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.gen.emplace(key, std::move(res)).first->second;
}

void mul_gen_into(const RootSystem& sys, const Mono& u, int g, const Scalar& c, Terms& dst) {
  if (u.empty() || factor(u, u.size() - 1) <= g) {
    add_term(dst, push(u, g), c);
    return;
  }
  add_scaled(dst, mul_gen_cached(sys, u, g), c);
}

void mono_mul_into(const RootSystem& sys, const Mono& u, const Mono& v, const Scalar& c, Terms& dst) {
  if (v.empty() || u.empty() || factor(u, u.size() - 1) <= factor(v, 0)) {
    add_term(dst, u + v, c);
    return;
  }
  Terms cur{{u, c}};
  for (size_t k = 0; k < v.size(); ++k) {
    Terms next;
    for (const auto& [w, cw] : cur) mul_gen_into(sys, w, factor(v, k), cw, next);
    cur = std::move(next);
  }
  add_scaled(dst, cur, Scalar(1));
}

std::string root_token(const RootSystem& sys, int id) { return "[" + sys.root(id).str() + "]"; }

}  // namespace

Terms mono_mul(const RootSystem& sys, const Mono& u, const Mono& v) {
  Terms out;
  mono_mul_into(sys, u, v, Scalar(1), out);
  return out;
}

std::vector<int> mono_weight(const RootSystem& sys, const Mono& m) {
  std::vector<int> w(sys.rank(), 0);
  for (size_t k = 0; k < m.size(); ++k) {
    auto rw = sys.weight(factor(m, k));
    for (int i = 0; i < sys.rank(); ++i) w[i] += rw[i];
  }
  return w;
}

Scalar Combination::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

int Combination::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::vector<int> Combination::weight() const {
  if (terms_.empty() || !sys_) return {};
  auto w = mono_weight(*sys_, terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_weight(*sys_, m) != w) return {};
  return w;
}

bool Combination::homogeneous() const { return terms_.empty() || !weight().empty(); }

std::string Combination::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    if (!first) s += (cs[0] == '-') ? " - " : " + ";
    else if (cs[0] == '-') s += "-";
    if (cs[0] == '-') cs = cs.substr(1);
    first = false;
    const bool unit = cs == "1";
    if (!unit || m.empty()) s += cs;
    size_t k = 0;
    while (k < m.size()) {
      size_t e = k;
      while (e < m.size() && m[e] == m[k]) ++e;
      if (!unit || k > 0) s += "*";
      s += root_token(*sys_, factor(m, k));
      if (e - k > 1) s += "^" + std::to_string(e - k);
      k = e;
    }
  }
  return s;
}

void Combination::check_same(const Combination& o) const {
  if (sys_ && o.sys_ && sys_ != o.sys_ &&
      (sys_->type() != o.sys_->type() || sys_->rank() != o.sys_->rank()))
    throw std::invalid_argument("operands belong to different root systems");
}

SymPoly SymPoly::constant(SystemPtr sys, const Scalar& c) {
  SymPoly p(std::move(sys));
  add_term(p.terms_, Mono(), c);
  return p;
}

SymPoly SymPoly::var(SystemPtr sys, int id) {
  SymPoly p(std::move(sys));
  p.terms_.emplace(mono_of({id}), Scalar(1));
  return p;
}

SymPoly SymPoly::operator-() const { return scaled(Scalar(-1)); }

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  check_same(o);
  if (!sys_) sys_ = o.sys_;
  add_scaled(terms_, o.terms_, Scalar(1));
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  check_same(o);
  if (!sys_) sys_ = o.sys_;
  add_scaled(terms_, o.terms_, Scalar(-1));
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.check_same(b);
  SymPoly r(a.sys_ ? a.sys_ : b.sys_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      Mono m;
      m.reserve(u.size() + v.size());
      std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(m),
                 [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
      add_term(r.terms_, m, cu * cv);
    }
  return r;
}

SymPoly SymPoly::scaled(const Scalar& c) const {
  SymPoly r(sys_);
  add_scaled(r.terms_, terms_, c);
  return r;
}

SymPoly SymPoly::derivative(int id) const {
  SymPoly r(sys_);
  const char ch = static_cast<char>(id);
  for (const auto& [m, c] : terms_) {
    auto k = std::count(m.begin(), m.end(), ch);
    if (!k) continue;
    Mono d = m;
    d.erase(d.find(ch), 1);
    add_term(r.terms_, d, c * Scalar(static_cast<long>(k)));
  }
  return r;
}

UeaElement UeaElement::constant(SystemPtr sys, const Scalar& c) {
  UeaElement p(std::move(sys));
  add_term(p.terms_, Mono(), c);
  return p;
}

UeaElement UeaElement::gen(SystemPtr sys, int id) {
  UeaElement p(std::move(sys));
  p.terms_.emplace(mono_of({id}), Scalar(1));
  return p;
}

UeaElement UeaElement::operator-() const { return scaled(Scalar(-1)); }

UeaElement& UeaElement::operator+=(const UeaElement& o) {
  check_same(o);
  if (!sys_) sys_ = o.sys_;
  add_scaled(terms_, o.terms_, Scalar(1));
  return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& o) {
  check_same(o);
  if (!sys_) sys_ = o.sys_;
  add_scaled(terms_, o.terms_, Scalar(-1));
  return *this;
}

UeaElement UeaElement::scaled(const Scalar& c) const {
  UeaElement r(sys_);
  add_scaled(r.terms_, terms_, c);
  return r;
}

UeaElement pbw_mul(const UeaElement& a, const UeaElement& b) {
  if (!a.system() || !b.system()) {
    // one side has no system attached only when it is zero
    return UeaElement(a.system() ? a.system() : b.system());
  }
  if (a.system()->type() != b.system()->type() || a.system()->rank() != b.system()->rank())
    throw std::invalid_argument("operands belong to different root systems");
  const RootSystem& sys = *a.system();
  Terms out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) mono_mul_into(sys, u, v, cu * cv, out);
  return UeaElement(a.system(), std::move(out));
}

UeaElement operator*(const UeaElement& a, const UeaElement& b) { return pbw_mul(a, b); }

UeaElement ad_gen(const UeaElement& a, int id) {
  const RootSystem& sys = *a.system();
  Terms out;
  const Mono g = mono_of({id});
  for (const auto& [u, c] : a.terms()) {
    mul_gen_into(sys, u, id, c, out);
    mono_mul_into(sys, g, u, -c, out);
  }
  return UeaElement(a.system(), std::move(out));
}

UeaElement commutator_direct(const UeaElement& a, const UeaElement& b) { return pbw_mul(a, b) - pbw_mul(b, a); }

UeaElement commutator(const UeaElement& a, const UeaElement& b) {
  if (!a.system() || !b.system()) return UeaElement(a.system() ? a.system() : b.system());
  if (a.system()->type() != b.system()->type() || a.system()->rank() != b.system()->rank())
    throw std::invalid_argument("operands belong to different root systems");
  const RootSystem& sys = *a.system();
  std::map<int, Terms> ad;
  for (const auto& [v, cv] : b.terms())
    for (size_t k = 0; k < v.size(); ++k) {
      int g = factor(v, k);
      if (!ad.count(g)) ad.emplace(g, ad_gen(a, g).terms());
    }
  Terms out;
  for (const auto& [v, cv] : b.terms())
    for (size_t p = 0; p < v.size(); ++p) {
      const Terms& x = ad.at(factor(v, p));
      if (x.empty()) continue;
      const Mono prefix = v.substr(0, p), suffix = v.substr(p + 1);
      for (const auto& [xm, xc] : x) {
        Terms left = mono_mul(sys, prefix, xm);
        for (const auto& [w, cw] : left) mono_mul_into(sys, w, suffix, cv * xc * cw, out);
      }
    }
  return UeaElement(a.system(), std::move(out));
}

bool factors_commute(const RootSystem& sys, const Mono& m) {
  for (size_t x = 0; x < m.size(); ++x)
    for (size_t y = x + 1; y < m.size(); ++y)
      if (m[x] != m[y] && !sys.bracket(factor(m, x), factor(m, y)).empty()) return false;
  return true;
}

UeaElement commuting_words(const SymPoly& p) {
  UeaElement out(p.system());
  for (const auto& [m, c] : p.terms()) {
    if (!factors_commute(*p.system(), m)) throw std::invalid_argument("monomial with non-commuting factors");
    add_term(out.mutable_terms(), m, c);
  }
  return out;
}

namespace {

void sym_dfs(const RootSystem& sys, std::vector<std::pair<int, int>>& counts, int left, const Terms& partial,
             const Scalar& weight, Terms& out) {
  if (left == 0) {
    add_scaled(out, partial, weight);
    return;
  }
  for (auto& [g, k] : counts) {
    if (!k) continue;
    --k;
    Terms next;
    for (const auto& [w, c] : partial) mul_gen_into(sys, w, g, c, next);
    sym_dfs(sys, counts, left - 1, next, weight, out);
    ++k;
  }
}

mpz_class factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

UeaElement symmetrize(const SymPoly& p) {
  UeaElement out(p.system());
  if (!p.system()) return out;
  const RootSystem& sys = *p.system();
  for (const auto& [m, c] : p.terms()) {
    if (factors_commute(sys, m)) {
      add_term(out.mutable_terms(), m, c);
      continue;
    }
    const int k = static_cast<int>(m.size());
    if (k > 8) throw std::length_error("symmetrization is capped at 8 factors");
    std::vector<std::pair<int, int>> counts;
    mpz_class mult = 1;
    for (size_t a = 0; a < m.size();) {
      size_t b = a;
      while (b < m.size() && m[b] == m[a]) ++b;
      counts.emplace_back(factor(m, a), static_cast<int>(b - a));
      mult *= factorial(static_cast<int>(b - a));
      a = b;
    }
    // each distinct ordering stands for prod(m_i!) of the k! orderings
    const Scalar w = c * Scalar(mpq_class(mult, factorial(k)));
    sym_dfs(sys, counts, k, Terms{{Mono(), Scalar(1)}}, w, out.mutable_terms());
  }
  return out;
}

int first_noncentral(const UeaElement& u) {
  if (!u.system()) return -1;
  const int N = u.system()->size();
  std::vector<char> bad(N, 0);
  parallel_for(static_cast<size_t>(N), [&](size_t id) { bad[id] = !ad_gen(u, static_cast<int>(id)).is_zero(); });
  for (int id = 0; id < N; ++id)
    if (bad[id]) return id;
  return -1;
}

bool is_central(const UeaElement& u) { return first_noncentral(u) < 0; }

std::vector<Mono> monomials_of_degree(const std::vector<int>& ids, int d) {
  std::vector<Mono> out;
  Mono cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t k = start; k < ids.size(); ++k) {
      cur.push_back(static_cast<char>(ids[k]));
      rec(k, left - 1);
      cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

std::vector<UeaElement> center_basis_upto(const SystemPtr& sys, int max_degree, const CenterBudget& budget) {
  if (max_degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (sys->rank() > budget.max_rank || max_degree > budget.max_degree)
    throw std::length_error("center solve budget exceeded (rank " + std::to_string(budget.max_rank) +
                            ", degree " + std::to_string(budget.max_degree) + ")");
  std::vector<int> ids(sys->size());
  std::iota(ids.begin(), ids.end(), 0);
  std::map<std::vector<int>, std::vector<Mono>> groups;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : monomials_of_degree(ids, d)) groups[mono_weight(*sys, m)].push_back(m);

  std::vector<std::pair<std::vector<int>, std::vector<Mono>>> work(groups.begin(), groups.end());
  std::vector<std::vector<UeaElement>> found(work.size());
  parallel_for(work.size(), [&](size_t gi) {
    const auto& monos = work[gi].second;
    const int ncols = static_cast<int>(monos.size());
    std::map<std::pair<int, Mono>, int> row_of;
    std::vector<std::vector<std::pair<int, Scalar>>> cols(ncols);
    for (int j = 0; j < ncols; ++j) {
      UeaElement u(sys, Terms{{monos[j], Scalar(1)}});
      for (int a = 0; a < sys->size(); ++a) {
        const UeaElement d = ad_gen(u, a);
        for (const auto& [m, c] : d.terms()) {
          auto [it, fresh] = row_of.try_emplace({a, m}, static_cast<int>(row_of.size()));
          cols[j].emplace_back(it->second, c);
        }
      }
    }
    std::vector<Vec> rows(row_of.size(), Vec(ncols));
    for (int j = 0; j < ncols; ++j)
      for (const auto& [r, c] : cols[j]) rows[r][j] = c;
    Echelon e(ncols);
    for (auto& r : rows) e.insert(std::move(r));
    for (const auto& x : e.nullspace()) {
      Terms t;
      for (int j = 0; j < ncols; ++j) add_term(t, monos[j], x[j]);
      found[gi].emplace_back(sys, std::move(t));
    }
  });
  std::vector<UeaElement> out;
  for (auto& f : found)
    for (auto& u : f) out.push_back(std::move(u));
  return out;
}

Scalar LinearForm::operator()(const Root& r) const {
  auto it = values.find(r);
  return it == values.end() ? Scalar() : it->second;
}

void LinearForm::set(const Root& r, const Scalar& v) {
  if (v.is_zero()) values.erase(r);
  else values[r] = v;
}

Scalar eval_point(const SymPoly& p, const std::vector<Scalar>& point) {
  Scalar total;
  for (const auto& [m, c] : p.terms()) {
    Scalar v = c;
    for (size_t k = 0; k < m.size() && !v.is_zero(); ++k) v *= point.at(factor(m, k));
    total += v;
  }
  return total;
}

Scalar eval_sym(const SymPoly& p, const LinearForm& f) {
  if (!p.system()) return p.coeff(Mono());
  std::vector<Scalar> point(p.system()->size());
  for (int id = 0; id < p.system()->size(); ++id) point[id] = f(p.system()->root(id));
  return eval_point(p, point);
}

}  // namespace ck
