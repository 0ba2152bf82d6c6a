#include "cascade_kit/rootsys.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace ck {

char type_char(Type t) {
  switch (t) {
    case Type::A: return 'A';
    case Type::B: return 'B';
    case Type::C: return 'C';
    case Type::D: return 'D';
  }
  return '?';
}

Type parse_type(const std::string& s) {
  if (s == "A" || s == "a") return Type::A;
  if (s == "B" || s == "b") return Type::B;
  if (s == "C" || s == "c") return Type::C;
  if (s == "D" || s == "d") return Type::D;
  throw std::invalid_argument("unknown root system type: " + s);
}

const char* kind_name(RootKind k) {
  switch (k) {
    case RootKind::diff: return "diff";
    case RootKind::sum: return "sum";
    case RootKind::short_: return "short";
    case RootKind::long_: return "long";
  }
  return "?";
}

int Root::col() const {
  switch (kind) {
    case RootKind::diff: return j;
    case RootKind::sum: return -j;
    case RootKind::long_: return -i;
    case RootKind::short_: return 0;
  }
  return 0;
}

std::vector<int> Root::weight(int n) const {
  std::vector<int> w(n, 0);
  switch (kind) {
    case RootKind::diff: w[i - 1] += 1; w[j - 1] -= 1; break;
    case RootKind::sum: w[i - 1] += 1; w[j - 1] += 1; break;
    case RootKind::short_: w[i - 1] += 1; break;
    case RootKind::long_: w[i - 1] += 2; break;
  }
  return w;
}

std::string Root::str() const {
  switch (kind) {
    case RootKind::diff: return "e" + std::to_string(i) + "-e" + std::to_string(j);
    case RootKind::sum: return "e" + std::to_string(i) + "+e" + std::to_string(j);
    case RootKind::short_: return "e" + std::to_string(i);
    case RootKind::long_: return "2e" + std::to_string(i);
  }
  return "?";
}

Root Root::parse(const std::string& s) {
  static const std::regex two(R"(\s*e(\d+)\s*([+-])\s*e(\d+)\s*)");
  static const std::regex one(R"(\s*(2?)e(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(s, m, two)) {
    int i = std::stoi(m[1]), j = std::stoi(m[3]);
    if (i >= j || i < 1) throw std::invalid_argument("root indices must satisfy 1 <= i < j: " + s);
    return m[2] == "-" ? diff(i, j) : sum(i, j);
  }
  if (std::regex_match(s, m, one)) {
    int i = std::stoi(m[2]);
    if (i < 1) throw std::invalid_argument("bad root: " + s);
    return m[1].length() ? long_(i) : short_(i);
  }
  throw std::invalid_argument("cannot parse root: " + s);
}

Scalar SparseMatrix::at(int r, int c) const {
  auto it = e_.find({r, c});
  return it == e_.end() ? Scalar() : it->second;
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = e_.try_emplace({r, c}, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  }
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  SparseMatrix r(dim_);
  for (const auto& [k1, v1] : e_)
    for (auto it = o.e_.lower_bound({k1.second, -1}); it != o.e_.end() && it->first.first == k1.second; ++it)
      r.add(k1.first, it->first.second, v1 * it->second);
  return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  SparseMatrix r = *this;
  for (const auto& [k, v] : o.e_) r.add(k.first, k.second, v);
  return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  SparseMatrix r = *this;
  for (const auto& [k, v] : o.e_) r.add(k.first, k.second, -v);
  return r;
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  SparseMatrix r(dim_);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : e_) r.e_.emplace(k, v * s);
  return r;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix r(dim_);
  for (const auto& [k, v] : e_) r.e_.emplace(std::make_pair(k.second, k.first), v);
  return r;
}

std::vector<Root> positive_roots(Type t, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if ((t == Type::A || t == Type::D) && n < 2)
    throw std::invalid_argument(std::string("rank too small for type ") + type_char(t));
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(Root::diff(i, j));
    if (t == Type::A) continue;
    if (t == Type::B) out.push_back(Root::short_(i));
    for (int j = n; j > i; --j) out.push_back(Root::sum(i, j));
    if (t == Type::C) out.push_back(Root::long_(i));
  }
  return out;
}

RootSystem::RootSystem(Type t, int n) : type_(t), n_(n), roots_(positive_roots(t, n)) {
  for (int k = 0; k < size(); ++k) ids_.emplace(roots_[k], k);
  const int d = dim();
  vectors_.reserve(roots_.size());
  for (const Root& r : roots_) {
    SparseMatrix m(d);
    const int i = r.i, j = r.j;
    switch (r.kind) {
      case RootKind::diff:
        m.add(pos(i), pos(j), 1);
        if (t != Type::A) m.add(pos(-j), pos(-i), -1);
        keys_.emplace_back(pos(i), pos(j));
        break;
      case RootKind::sum:
        m.add(pos(i), pos(-j), 1);
        m.add(pos(j), pos(-i), t == Type::C ? 1 : -1);
        keys_.emplace_back(pos(i), pos(-j));
        break;
      case RootKind::long_:
        m.add(pos(i), pos(-i), 1);
        keys_.emplace_back(pos(i), pos(-i));
        break;
      case RootKind::short_:
        m.add(pos(i), pos(0), Scalar::sqrt2());
        m.add(pos(0), pos(-i), -Scalar::sqrt2());
        keys_.emplace_back(pos(i), pos(0));
        break;
    }
    vectors_.push_back(std::move(m));
  }
  const int N = size();
  table_.resize(static_cast<size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (b < a) {
        for (const auto& [g, c] : table_[b * N + a]) table_[a * N + b].emplace_back(g, -c);
        continue;
      }
      SparseMatrix com = vectors_[a] * vectors_[b] - vectors_[b] * vectors_[a];
      table_[a * N + b] = decompose(com);
    }
}

std::shared_ptr<const RootSystem> RootSystem::make(Type t, int n) {
  return std::shared_ptr<const RootSystem>(new RootSystem(t, n));
}

std::string RootSystem::name() const {
  return std::string(1, type_char(type_)) + std::to_string(type_ == Type::A ? n_ - 1 : n_);
}

int RootSystem::index(const Root& r) const {
  auto it = ids_.find(r);
  return it == ids_.end() ? -1 : it->second;
}

int RootSystem::require(const Root& r) const {
  int id = index(r);
  if (id < 0) throw std::invalid_argument("root " + r.str() + " not in " + name());
  return id;
}

int RootSystem::dim() const {
  switch (type_) {
    case Type::A: return n_;
    case Type::B: return 2 * n_ + 1;
    default: return 2 * n_;
  }
}

int RootSystem::pos(int s) const {
  if (s > 0 && s <= n_) return s - 1;
  if (type_ == Type::A) throw std::out_of_range("bad basis index for type A");
  if (s == 0) {
    if (type_ != Type::B) throw std::out_of_range("index 0 only exists for type B");
    return n_;
  }
  if (s < 0 && s >= -n_) return (type_ == Type::B ? n_ + 1 : n_) + (n_ + s);
  throw std::out_of_range("bad basis index");
}

std::vector<int> RootSystem::basis_labels() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) out.push_back(i);
  if (type_ == Type::A) return out;
  if (type_ == Type::B) out.push_back(0);
  for (int i = n_; i >= 1; --i) out.push_back(-i);
  return out;
}

RootCombo RootSystem::decompose(const SparseMatrix& m) const {
  RootCombo out;
  SparseMatrix rest = m;
  for (int id = 0; id < size() && !rest.is_zero(); ++id) {
    Scalar v = rest.at(keys_[id].first, keys_[id].second);
    if (v.is_zero()) continue;
    Scalar c = v / vectors_[id].at(keys_[id].first, keys_[id].second);
    rest = rest - vectors_[id].scaled(c);
    out.emplace_back(id, c);
  }
  if (!rest.is_zero()) throw std::logic_error("matrix is not in the span of the positive root vectors");
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Scalar RootSystem::dual_scale(int id) const {
  const Root& r = root(id);
  if (type_ == Type::A) return 1;
  if (type_ == Type::C && r.kind == RootKind::long_) return 1;
  if (type_ == Type::B && r.kind == RootKind::short_) return Scalar::ratio(1, 4);
  return Scalar::ratio(1, 2);
}

SparseMatrix RootSystem::gram() const {
  SparseMatrix g(dim());
  if (type_ == Type::A) throw std::logic_error("type A carries no invariant form here");
  for (int i = 1; i <= n_; ++i) {
    g.add(pos(i), pos(-i), 1);
    g.add(pos(-i), pos(i), type_ == Type::C ? -1 : 1);
  }
  if (type_ == Type::B) g.add(pos(0), pos(0), 1);
  return g;
}

int cascade_size(Type t, int n) {
  switch (t) {
    case Type::A: return n / 2;
    case Type::B:
    case Type::C: return n;
    case Type::D: return n % 2 == 0 ? n : n - 1;
  }
  return 0;
}

int k_index(Type t, int n, int i) {
  const int m = cascade_size(t, n);
  if (i < 1 || i > m) throw std::out_of_range("generator index out of range");
  if (t == Type::A || t == Type::C) return 1;
  if (i % 2 == 1) return 1;
  return i < m ? 2 : 1;
}

namespace {

std::vector<mpq_class> fundamental_weight(Type t, int n, int i) {
  std::vector<mpq_class> w(n, mpq_class(0));
  auto fill = [&](int upto, const mpq_class& v) {
    for (int k = 0; k < upto; ++k) w[k] = v;
  };
  switch (t) {
    case Type::A:
    case Type::C: fill(i, 1); break;
    case Type::B:
      if (i < n) fill(i, 1);
      else fill(n, mpq_class(1, 2));
      break;
    case Type::D:
      if (i <= n - 2) {
        fill(i, 1);
      } else if (i == n - 1) {
        fill(n, mpq_class(1, 2));
        w[n - 1] = mpq_class(-1, 2);
      } else {
        fill(n, mpq_class(1, 2));
      }
      break;
  }
  return w;
}

std::vector<mpq_class> apply_w0(Type t, int n, const std::vector<mpq_class>& v) {
  std::vector<mpq_class> out(n);
  if (t == Type::A) {
    for (int k = 0; k < n; ++k) out[k] = v[n - 1 - k];
    return out;
  }
  for (int k = 0; k < n; ++k) out[k] = -v[k];
  if (t == Type::D && n % 2 == 1) out[n - 1] = v[n - 1];
  return out;
}

}  // namespace

W0Weight weight_w0_omega(const RootSystem& sys, int i) {
  const Type t = sys.type();
  const int n = sys.rank();
  const int m = cascade_size(t, n);
  if (i < 1 || i > m) throw std::out_of_range("weight index out of range");
  W0Weight out;
  out.k = k_index(t, n, i);
  auto w = fundamental_weight(t, n, i);
  auto w0w = apply_w0(t, n, w);
  out.weight.resize(n);
  for (int k = 0; k < n; ++k) out.weight[k] = (w[k] - w0w[k]) / out.k;
  return out;
}

SparseMatrix root_vector(const RootSystem& sys, const Root& a) { return sys.root_vector(sys.require(a)); }

std::map<Root, Scalar> bracket_basis(const RootSystem& sys, const Root& a, const Root& b) {
  std::map<Root, Scalar> out;
  for (const auto& [g, c] : sys.bracket(sys.require(a), sys.require(b))) out.emplace(sys.root(g), c);
  return out;
}

Scalar dual_scale(const RootSystem& sys, const Root& a) { return sys.dual_scale(sys.require(a)); }

}  // namespace ck
