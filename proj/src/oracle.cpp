#include "cascade_kit/oracle.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace ck {

int PolyMatrix::degree() const {
  int d = -1;
  for (const auto& [k, v] : e_)
    for (int t = static_cast<int>(v.size()) - 1; t >= 0; --t)
      if (!v[t].is_zero()) {
        d = std::max(d, t);
        break;
      }
  return d;
}

Scalar PolyMatrix::coeff(int r, int c, int k) const {
  auto it = e_.find({r, c});
  if (it == e_.end() || k >= static_cast<int>(it->second.size())) return Scalar();
  return it->second[k];
}

void PolyMatrix::add(int r, int c, int k, const Scalar& v) {
  if (v.is_zero()) return;
  auto& p = e_[{r, c}];
  if (static_cast<int>(p.size()) <= k) p.resize(k + 1);
  p[k] += v;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) return false;
  const int d = std::max(a.degree(), b.degree());
  for (int r = 0; r < a.dim_; ++r)
    for (int c = 0; c < a.dim_; ++c)
      for (int k = 0; k <= d; ++k)
        if (a.coeff(r, c, k) != b.coeff(r, c, k)) return false;
  return true;
}

PolyMatrix exp_nilpotent(const SparseMatrix& x) {
  const int d = x.dim();
  PolyMatrix out(d);
  for (int r = 0; r < d; ++r) out.add(r, r, 0, 1);
  SparseMatrix power = x;
  mpz_class fact = 1;
  for (int k = 1; !power.is_zero(); ++k) {
    if (k > d) throw std::invalid_argument("matrix is not nilpotent");
    fact *= k;
    const Scalar inv(mpq_class(1, fact));
    for (const auto& [key, v] : power.entries()) out.add(key.first, key.second, k, v * inv);
    power = power * x;
  }
  return out;
}

namespace {

using Series = std::vector<SymPoly>;  // coefficients of t^0 .. t^K

Series series_mul(const Series& a, const Series& b, int K, const SystemPtr& sys) {
  Series out(K + 1, SymPoly(sys));
  for (int p = 0; p <= K && p < static_cast<int>(a.size()); ++p) {
    if (a[p].is_zero()) continue;
    for (int q = 0; p + q <= K && q < static_cast<int>(b.size()); ++q)
      if (!b[q].is_zero()) out[p + q] += a[p] * b[q];
  }
  return out;
}

Series series_det(const std::vector<std::vector<Series>>& m, int K, const SystemPtr& sys) {
  const int n = static_cast<int>(m.size());
  std::unordered_map<unsigned, Series> memo;
  std::function<Series(int, unsigned)> rec = [&](int row, unsigned used) -> Series {
    if (row == n) {
      Series one(K + 1, SymPoly(sys));
      one[0] = SymPoly::constant(sys, 1);
      return one;
    }
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Series acc(K + 1, SymPoly(sys));
    int free_index = 0;
    for (int c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      Series term = series_mul(m[row][c], rec(row + 1, used | (1u << c)), K, sys);
      for (int k = 0; k <= K; ++k) {
        if (free_index % 2) acc[k] -= term[k];
        else acc[k] += term[k];
      }
      ++free_index;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0, 0u);
}

}  // namespace

Expansion s_i_expansion(const SystemPtr& sys, int i, int max_order) {
  const int d = sys->dim();
  if (i < 1 || i > d / 2) throw std::out_of_range("minor size out of range");
  const int K = max_order < 0 ? i + 1 : max_order;
  // X = sum_alpha c_alpha e_alpha e_alpha^T with symbolic e_alpha
  using DenseSym = std::vector<std::vector<SymPoly>>;
  DenseSym X(d, std::vector<SymPoly>(d, SymPoly(sys)));
  for (int id = 0; id < sys->size(); ++id) {
    const SymPoly v = SymPoly::var(sys, id).scaled(sys->dual_scale(id));
    for (const auto& [key, c] : sys->root_vector(id).entries()) X[key.second][key.first] += v.scaled(c);
  }
  // powers of X; only the first i columns are needed
  std::vector<DenseSym> powers;
  DenseSym P(d, std::vector<SymPoly>(i, SymPoly(sys)));
  for (int r = 0; r < d; ++r)
    if (r < i) P[r][r] = SymPoly::constant(sys, 1);
  powers.push_back(P);
  for (int k = 1; k <= K; ++k) {
    DenseSym next(d, std::vector<SymPoly>(i, SymPoly(sys)));
    for (int r = 0; r < d; ++r)
      for (int m = 0; m < d; ++m) {
        if (X[r][m].is_zero()) continue;
        for (int c = 0; c < i; ++c)
          if (!powers.back()[m][c].is_zero()) next[r][c] += X[r][m] * powers.back()[m][c];
      }
    powers.push_back(std::move(next));
  }
  std::vector<std::vector<Series>> minor(i, std::vector<Series>(i, Series(K + 1, SymPoly(sys))));
  mpz_class fact = 1;
  for (int k = 0; k <= K; ++k) {
    if (k) fact *= k;
    const Scalar inv(mpq_class(1, fact));
    for (int a = 0; a < i; ++a)
      for (int c = 0; c < i; ++c) minor[a][c][k] = powers[k][d - i + a][c].scaled(inv);
  }
  Series det = series_det(minor, K, sys);
  Expansion out;
  for (int k = 0; k <= K; ++k)
    if (!det[k].is_zero()) {
      out.order = k;
      out.leading = det[k];
      break;
    }
  if (out.order < 0) out.leading = SymPoly(sys);
  return out;
}

ExpectedLeading expected_leading(const SystemPtr& sys, int i) {
  const Type t = sys->type();
  const int n = sys->rank();
  const std::string x = "xi_" + std::to_string(i);
  if (t == Type::A || t == Type::C) return {xi_symbol(sys, i), x};
  if (i % 2 == 1 && !is_bordered(t, n, i)) return {xi_symbol(sys, i), x};
  if (t == Type::D && n % 2 == 0 && i == n - 1)
    return {xi_symbol(sys, i) * xi_symbol(sys, n), x + "*xi_" + std::to_string(n)};
  SymPoly g = xi_symbol(sys, i);
  return {g * g, x + "^2"};
}

bool proportional(const SymPoly& lead, const SymPoly& candidate, Scalar* ratio) {
  if (lead.is_zero() || candidate.is_zero()) return false;
  const auto& [m, c] = *candidate.terms().begin();
  Scalar r = lead.coeff(m) / c;
  if (r.is_zero()) return false;
  if (!(lead == candidate.scaled(r))) return false;
  if (ratio) *ratio = r;
  return true;
}

OracleReport oracle_compare(const SystemPtr& sys, int i) {
  OracleReport rep;
  rep.system = sys->name();
  rep.i = i;
  rep.k_i = k_index(sys->type(), sys->rank(), i);
  ExpectedLeading exp = expected_leading(sys, i);
  rep.expected = exp.description;
  rep.expected_order = exp.product.degree();
  Expansion e = s_i_expansion(sys, i, rep.expected_order + 1);
  rep.order = e.order;
  rep.match = proportional(e.leading, exp.product, &rep.scalar);
  if (!rep.match) rep.detail = e.order < 0 ? "minor vanishes up to the budget" : "leading coefficient is not proportional";
  return rep;
}

}  // namespace ck
