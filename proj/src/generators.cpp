#include "cascade_kit/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "cascade_kit/cascade.hpp"

namespace ck {

namespace {

SymPoly det_rec(const SymMatrix& m, const SystemPtr& sys, int row, unsigned used,
                std::unordered_map<unsigned, SymPoly>& memo) {
  const int k = static_cast<int>(m.size());
  if (row == k) return SymPoly::constant(sys, 1);
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  SymPoly acc(sys);
  int free_index = 0;
  for (int c = 0; c < k; ++c) {
    if (used & (1u << c)) continue;
    const SymPoly& a = m[row][c];
    if (!a.is_zero()) {
      SymPoly term = a * det_rec(m, sys, row + 1, used | (1u << c), memo);
      if (free_index % 2) acc -= term;
      else acc += term;
    }
    ++free_index;
  }
  memo.emplace(used, acc);
  return acc;
}

SymPoly pf_rec(const SymMatrix& s, const SystemPtr& sys, unsigned left,
               std::unordered_map<unsigned, SymPoly>& memo) {
  if (!left) return SymPoly::constant(sys, 1);
  if (auto it = memo.find(left); it != memo.end()) return it->second;
  const int first = std::countr_zero(left);
  const unsigned rest = left & ~(1u << first);
  SymPoly acc(sys);
  int idx = 0;
  for (int j = first + 1; j < static_cast<int>(s.size()); ++j) {
    if (!(rest & (1u << j))) continue;
    ++idx;
    const SymPoly& a = s[first][j];
    if (a.is_zero()) continue;
    SymPoly term = a * pf_rec(s, sys, rest & ~(1u << j), memo);
    // idx-th remaining partner carries sign (-1)^(idx+1)
    if (idx % 2) acc += term;
    else acc -= term;
  }
  memo.emplace(left, acc);
  return acc;
}

SymPoly var(const SystemPtr& sys, const Root& r) { return SymPoly::var(sys, r); }

/// e_{a+c} above the diagonal, skew below, on indices 1..k.
SymMatrix plus_skew(const SystemPtr& sys, int k) {
  SymMatrix s(k, std::vector<SymPoly>(k, SymPoly(sys)));
  for (int a = 1; a <= k; ++a)
    for (int c = a + 1; c <= k; ++c) {
      s[a - 1][c - 1] = var(sys, Root::sum(a, c));
      s[c - 1][a - 1] = -s[a - 1][c - 1];
    }
  return s;
}

SymPoly normalize_on(const SymPoly& p, const Mono& m, const std::string& what) {
  Scalar c = p.coeff(m);
  if (c.is_zero()) throw std::logic_error("normalizing term missing from " + what);
  return p.scaled(c.inverse());
}

Mono sorted_mono(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  Mono m;
  for (int id : ids) m.push_back(static_cast<char>(id));
  return m;
}

/// e_{1+2} e_{3+4} ... e_{(k-1)+k}
std::vector<int> matching_ids(const RootSystem& sys, int k) {
  std::vector<int> ids;
  for (int a = 1; a + 1 <= k; a += 2) ids.push_back(sys.require(Root::sum(a, a + 1)));
  return ids;
}

void require_type(const RootSystem& sys, std::initializer_list<Type> ok, const char* what) {
  for (Type t : ok)
    if (sys.type() == t) return;
  throw std::invalid_argument(std::string(what) + " is not defined for type " + type_char(sys.type()));
}

void require_index(const RootSystem& sys, int i) {
  const int m = cascade_size(sys.type(), sys.rank());
  if (i < 1 || i > m)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." + std::to_string(m));
}

}  // namespace

SymPoly det(const SymMatrix& m, const SystemPtr& sys) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.size() > 20) throw std::length_error("matrix too large");
  std::unordered_map<unsigned, SymPoly> memo;
  return det_rec(m, sys, 0, 0u, memo);
}

SymPoly pfaffian(const SymMatrix& skew, const SystemPtr& sys) {
  if (skew.size() % 2) return SymPoly(sys);
  if (skew.size() > 20) throw std::length_error("matrix too large");
  std::unordered_map<unsigned, SymPoly> memo;
  return pf_rec(skew, sys, (1u << skew.size()) - 1, memo);
}

UMatrix::UMatrix(SystemPtr sys) : sys_(std::move(sys)) {
  require_type(*sys_, {Type::A, Type::C}, "the matrix U");
  const int n = sys_->rank();
  for (int i = 1; i <= n; ++i) labels_.push_back(i);
  if (sys_->type() == Type::C)
    for (int i = n; i >= 1; --i) labels_.push_back(-i);
}

int UMatrix::order(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("label outside U");
  return static_cast<int>(it - labels_.begin());
}

std::optional<std::pair<int, Scalar>> UMatrix::entry(int r, int c) const {
  const RootSystem& s = *sys_;
  if (s.type() == Type::A) {
    if (r >= 1 && r < c && c <= s.rank()) return std::make_pair(s.require(Root::diff(r, c)), Scalar(1));
    return std::nullopt;
  }
  if (r > 0 && c > 0) {
    if (r < c) return std::make_pair(s.require(Root::diff(r, c)), Scalar(1));
    return std::nullopt;
  }
  if (r < 0 && c < 0) {
    // U_{-j,-i} = -U_{i,j}
    const int i = -c, j = -r;
    if (i < j) return std::make_pair(s.require(Root::diff(i, j)), Scalar(-1));
    return std::nullopt;
  }
  if (r > 0 && c < 0) {
    const int j = -c;
    if (r == j) return std::make_pair(s.require(Root::long_(r)), Scalar(2));
    return std::make_pair(s.require(Root::sum(std::min(r, j), std::max(r, j))), Scalar(1));
  }
  return std::nullopt;
}

SymPoly UMatrix::sym(int r, int c) const {
  auto e = entry(r, c);
  if (!e) return SymPoly(sys_);
  return SymPoly::var(sys_, e->first).scaled(e->second);
}

SymPoly UMatrix::minor(std::vector<int> rows, std::vector<int> cols) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
  std::sort(rows.begin(), rows.end(), [&](int a, int b) { return order(a) < order(b); });
  std::sort(cols.begin(), cols.end(), [&](int a, int b) { return order(a) < order(b); });
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
      std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw std::invalid_argument("duplicate row or column index in minor");
  SymMatrix m(rows.size(), std::vector<SymPoly>(cols.size(), SymPoly(sys_)));
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = 0; b < cols.size(); ++b) m[a][b] = sym(rows[a], cols[b]);
  return det(m, sys_);
}

bool in_cascade(const RootSystem& sys, const Root& alpha) {
  for (const Root& b : finite_cascade(sys.type(), sys.rank()))
    if (b == alpha) return true;
  return false;
}

CascadeLevel cascade_level(const RootSystem& sys, const Root& alpha) {
  require_type(sys, {Type::A, Type::C}, "cascade levels");
  sys.require(alpha);
  const int n = sys.rank();
  const auto cascade = finite_cascade(sys.type(), n);
  CascadeLevel lv;
  lv.alpha = alpha;
  lv.k = sys.type() == Type::A ? std::min(alpha.row(), n - alpha.col() + 1) : alpha.row();
  for (int l = 1; l < lv.k; ++l) lv.B_alpha.push_back(cascade.at(l - 1));
  lv.B_alpha.push_back(alpha);
  for (const Root& g : lv.B_alpha) {
    lv.R_alpha.push_back(g.row());
    lv.C_alpha.push_back(g.col());
  }
  std::sort(lv.R_alpha.begin(), lv.R_alpha.end());
  return lv;
}

SymPoly delta_alpha_symbol(const SystemPtr& sys, const Root& alpha) {
  const CascadeLevel lv = cascade_level(*sys, alpha);
  return UMatrix(sys).minor(lv.R_alpha, lv.C_alpha);
}

UeaElement delta_alpha(const SystemPtr& sys, const Root& alpha) {
  return commuting_words(delta_alpha_symbol(sys, alpha));
}

SymPoly delta_symbol(const SystemPtr& sys, int i) {
  require_type(*sys, {Type::A, Type::C}, "Delta_i");
  require_index(*sys, i);
  return delta_alpha_symbol(sys, finite_cascade(sys->type(), sys->rank()).at(i - 1));
}

UeaElement delta_i(const SystemPtr& sys, int i) { return commuting_words(delta_symbol(sys, i)); }

bool is_bordered(Type t, int n, int i) {
  return (t == Type::D && n % 2 == 0 && i == n - 1) || (t == Type::B && n % 2 == 1 && i == n);
}

SymPoly pfaffian_symbol(const SystemPtr& sys, int i) {
  require_type(*sys, {Type::B, Type::D}, "P_i");
  require_index(*sys, i);
  if (i % 2) throw std::invalid_argument("Pfaffian generators need an even index");
  SymPoly pf = pfaffian(plus_skew(sys, i), sys);
  return normalize_on(pf, sorted_mono(matching_ids(*sys, i)), "the Pfaffian");
}

UeaElement p_i(const SystemPtr& sys, int i) { return commuting_words(pfaffian_symbol(sys, i)); }

namespace {

/// v_a = (-1)^(a+1) Pf(S without a), so that adj(S) = v v^T for odd skew S.
std::vector<SymPoly> pfaffian_vector(const SystemPtr& sys, const SymMatrix& s) {
  const int i = static_cast<int>(s.size());
  std::vector<SymPoly> v;
  for (int k = 0; k < i; ++k) {
    SymMatrix rest;
    for (int a = 0; a < i; ++a) {
      if (a == k) continue;
      std::vector<SymPoly> row;
      for (int b = 0; b < i; ++b)
        if (b != k) row.push_back(s[a][b]);
      rest.push_back(std::move(row));
    }
    SymPoly pf = pfaffian(rest, sys);
    v.push_back(k % 2 ? -pf : pf);
  }
  return v;
}

SymPoly adjugate_symbol(const SystemPtr& sys, int i) {
  const int n = sys->rank();
  const auto v = pfaffian_vector(sys, plus_skew(sys, i));
  SymPoly total(sys);
  for (int j = i + 1; j <= n; ++j) {
    SymPoly minus(sys), plus(sys);
    for (int a = 1; a <= i; ++a) {
      minus += v[a - 1] * var(sys, Root::diff(a, j));
      plus += v[a - 1] * var(sys, Root::sum(a, j));
    }
    total += minus * plus;
  }
  if (sys->type() == Type::B) {
    SymPoly sh(sys);
    for (int a = 1; a <= i; ++a) sh += v[a - 1] * var(sys, Root::short_(a));
    total += (sh * sh).scaled(Scalar::ratio(1, 4));
  }
  return total;
}

}  // namespace

SymPoly odd_formula_symbol(const SystemPtr& sys, int i, OddReading reading) {
  require_type(*sys, {Type::B, Type::D}, "the odd generators");
  const int n = sys->rank();
  if (i < 1 || i % 2 == 0 || i > n) throw std::invalid_argument("odd generator index out of range");
  if (reading == OddReading::adjugate) return adjugate_symbol(sys, i);
  const SymMatrix s = plus_skew(sys, i);
  // (U^i)_{a,b} = S_{a, i-b+1}
  SymMatrix u(i, std::vector<SymPoly>(i, SymPoly(sys)));
  for (int a = 0; a < i; ++a)
    for (int b = 0; b < i; ++b) u[a][b] = s[a][i - 1 - b];
  SymPoly total(sys);
  for (int s_idx = 1; s_idx <= i; ++s_idx) {
    SymPoly a_s(sys);
    for (int j = s_idx + 1; j <= n; ++j) a_s += var(sys, Root::diff(s_idx, j)) * var(sys, Root::sum(s_idx, j));
    if (sys->type() == Type::B) {
      SymPoly e = var(sys, Root::short_(s_idx));
      a_s += (e * e).scaled(Scalar::ratio(1, 4));
    }
    if (a_s.is_zero()) continue;
    const int drop_row = (reading == OddReading::literal ? i - s_idx + 1 : s_idx) - 1;
    const int drop_col = i - s_idx;
    SymMatrix minor;
    for (int a = 0; a < i; ++a) {
      if (a == drop_row) continue;
      std::vector<SymPoly> row;
      for (int b = 0; b < i; ++b)
        if (b != drop_col) row.push_back(u[a][b]);
      minor.push_back(std::move(row));
    }
    total += a_s * det(minor, sys);
  }
  return total;
}

SymPoly bordered_symbol(const SystemPtr& sys, int i) {
  const int n = sys->rank();
  if (!is_bordered(sys->type(), n, i)) throw std::invalid_argument("no bordered generator at this index");
  const int size = sys->type() == Type::D ? n : n + 1;
  SymMatrix s(size, std::vector<SymPoly>(size, SymPoly(sys)));
  for (int a = 1; a <= size; ++a)
    for (int c = a + 1; c <= size; ++c) {
      Root r = c < size ? Root::sum(a, c) : (sys->type() == Type::D ? Root::diff(a, n) : Root::short_(a));
      s[a - 1][c - 1] = var(sys, r);
      s[c - 1][a - 1] = -s[a - 1][c - 1];
    }
  SymPoly pf = pfaffian(s, sys);
  // the border entry of the last free index times the preceding Pfaffian
  auto ids = matching_ids(*sys, size - 2);
  ids.push_back(sys->require(sys->type() == Type::D ? Root::diff(n - 1, n) : Root::short_(n)));
  return normalize_on(pf, sorted_mono(ids), "the bordered Pfaffian");
}

OddReading default_odd_reading() { return OddReading::adjugate; }

OddGenerator d_i(const SystemPtr& sys, int i) {
  require_type(*sys, {Type::B, Type::D}, "D_i");
  require_index(*sys, i);
  if (i % 2 == 0) throw std::invalid_argument("odd generators need an odd index");
  OddGenerator g;
  g.symbol = is_bordered(sys->type(), sys->rank(), i) ? bordered_symbol(sys, i)
                                                       : odd_formula_symbol(sys, i, default_odd_reading());
  g.element = symmetrize(g.symbol);
  return g;
}

SymPoly xi_symbol(const SystemPtr& sys, int i) {
  require_index(*sys, i);
  switch (sys->type()) {
    case Type::A:
    case Type::C: return delta_symbol(sys, i);
    default: break;
  }
  if (is_bordered(sys->type(), sys->rank(), i)) return bordered_symbol(sys, i);
  if (i % 2 == 0) return pfaffian_symbol(sys, i);
  return odd_formula_symbol(sys, i, default_odd_reading());
}

UeaElement canonical_generator(const SystemPtr& sys, int i) {
  SymPoly p = xi_symbol(sys, i);
  for (const auto& [m, c] : p.terms())
    if (!factors_commute(*sys, m)) return symmetrize(p);
  return commuting_words(p);
}

std::string generator_label(Type t, int i) {
  if (t == Type::A || t == Type::C) return "delta:" + std::to_string(i);
  return (i % 2 ? "d:" : "p:") + std::to_string(i);
}

std::vector<Root> a_set(const RootSystem& sys, const Root& alpha) {
  require_type(sys, {Type::A, Type::C}, "A(alpha)");
  sys.require(alpha);
  if (in_cascade(sys, alpha)) throw std::invalid_argument("A(alpha) is defined only off the cascade");
  const int n = sys.rank(), i = alpha.i, j = alpha.j;
  std::vector<Root> out;
  if (sys.type() == Type::A) {
    if (j < n - i + 1)
      for (int k = j + 1; k <= n - i + 1; ++k) out.push_back(Root::diff(j, k));
    else
      for (int k = n - j + 1; k <= i - 1; ++k) out.push_back(Root::diff(k, i));
    return out;
  }
  if (alpha.kind == RootKind::diff) {
    for (int k = i; k <= j - 1; ++k) out.push_back(Root::sum(k, j));
    for (const Root& r : sys.roots())
      if (r.row() == j) out.push_back(r);
  } else if (alpha.kind == RootKind::sum) {
    for (int k = i; k <= j - 1; ++k) out.push_back(Root::diff(k, j));
  }
  return out;
}

int commutator_expected_sign(const RootSystem& sys, const Root& alpha) {
  if (sys.type() == Type::A) return alpha.j < sys.rank() - alpha.i + 1 ? 1 : -1;
  return alpha.kind == RootKind::sum ? -1 : 1;
}

std::optional<Root> exchange_partner(const RootSystem& sys, const Root& alpha) {
  const int n = sys.rank();
  if (alpha.kind != RootKind::diff) return std::nullopt;
  if (sys.type() == Type::A) {
    if (alpha.j < n - alpha.i + 1) return Root::diff(alpha.j, n - alpha.i + 1);
    return std::nullopt;
  }
  if (sys.type() == Type::C) return Root::sum(alpha.i, alpha.j);
  return std::nullopt;
}

std::optional<Root> root_sum(const RootSystem& sys, const Root& a, const Root& b) {
  auto w = a.weight(sys.rank());
  auto v = b.weight(sys.rank());
  for (size_t k = 0; k < w.size(); ++k) w[k] += v[k];
  for (const Root& r : sys.roots())
    if (r.weight(sys.rank()) == w) return r;
  return std::nullopt;
}

}  // namespace ck
