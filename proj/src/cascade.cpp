#include "cascade_kit/cascade.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ck {

namespace {

std::string tail_name(TailRule r) {
  switch (r) {
    case TailRule::increasing: return "increasing";
    case TailRule::decreasing: return "decreasing";
    case TailRule::outside_in: return "outside-in";
  }
  return "?";
}

TailRule parse_tail(const std::string& s) {
  if (s == "increasing") return TailRule::increasing;
  if (s == "decreasing") return TailRule::decreasing;
  if (s == "outside-in" || s == "outside_in") return TailRule::outside_in;
  throw std::invalid_argument("unknown tail rule: " + s);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

OrderSpec OrderSpec::parse(const std::string& dsl) {
  const std::string s = trim(dsl);
  if (s == "natural") return natural();
  if (s == "outside-in" || s == "outside_in") return outside_in();
  OrderSpec o;
  bool saw_tail = false;
  std::stringstream parts(s);
  std::string part;
  while (std::getline(parts, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("order clause without ':' : " + part);
    std::string key = trim(part.substr(0, colon)), val = trim(part.substr(colon + 1));
    if (key == "prefix") {
      std::stringstream items(val);
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v == 0) throw std::invalid_argument("bad prefix entry: " + item);
        o.prefix.push_back(v);
      }
    } else if (key == "tail") {
      o.tail = parse_tail(val);
      saw_tail = true;
    } else {
      throw std::invalid_argument("unknown order clause: " + key);
    }
  }
  if (!saw_tail && o.prefix.empty()) throw std::invalid_argument("empty order spec: " + dsl);
  std::set<int> seen;
  for (int p : o.prefix)
    if (!seen.insert(std::abs(p)).second) throw std::invalid_argument("repeated prefix index " + std::to_string(std::abs(p)));
  return o;
}

std::string OrderSpec::str() const {
  if (prefix.empty() && tail == TailRule::increasing) return "natural";
  if (prefix.empty() && tail == TailRule::outside_in) return "outside-in";
  std::string s;
  if (!prefix.empty()) {
    s = "prefix:";
    for (size_t k = 0; k < prefix.size(); ++k) s += (k ? "," : "") + std::to_string(prefix[k]);
    s += ";";
  }
  return s + "tail:" + tail_name(tail);
}

bool OrderSpec::in_prefix(int a) const {
  return std::any_of(prefix.begin(), prefix.end(), [a](int p) { return std::abs(p) == a; });
}

int OrderSpec::sign(int i) const {
  for (int p : prefix)
    if (std::abs(p) == i) return p > 0 ? 1 : -1;
  return 1;
}

int OrderSpec::tail_at(int t) const {
  // t-th smallest positive integer outside the prefix
  std::vector<int> pre;
  for (int p : prefix) pre.push_back(std::abs(p));
  std::sort(pre.begin(), pre.end());
  int a = t;
  for (int p : pre)
    if (p <= a) ++a;
  return a;
}

int OrderSpec::tail_position(int a) const {
  int below = 0;
  for (int p : prefix)
    if (std::abs(p) < a) ++below;
  return a - below;
}

bool OrderSpec::higher(int a, int b) const {
  auto key = [this](int x) -> std::pair<int, int> {
    for (size_t k = 0; k < prefix.size(); ++k)
      if (std::abs(prefix[k]) == x) return {0, static_cast<int>(k)};
    int t = tail_position(x);
    switch (tail) {
      case TailRule::increasing: return {1, t};
      case TailRule::decreasing: return {3, -t};
      case TailRule::outside_in: return t % 2 ? std::make_pair(1, t) : std::make_pair(2, -t);
    }
    return {4, 0};
  };
  return key(a) < key(b);
}

std::vector<std::string> validate_order(Type t, const OrderSpec& o) {
  std::vector<std::string> issues;
  std::set<int> seen;
  for (int p : o.prefix) {
    if (p == 0) issues.push_back("prefix entry 0");
    if (!seen.insert(std::abs(p)).second) issues.push_back("repeated prefix index " + std::to_string(std::abs(p)));
    if (t == Type::A && p < 0) issues.push_back("type A orders have no signs: " + std::to_string(p));
  }
  if (t == Type::D && o.tail != TailRule::increasing) {
    // the minimal positive element is the bottom of the tail
    int t1 = o.tail == TailRule::decreasing ? o.tail_at(1) : o.tail_at(2);
    if (o.sign(t1) < 0) issues.push_back("minimal positive element is not in Z>0");
  }
  return issues;
}

std::string ThetaRoot::str() const {
  const std::string a = "t" + std::to_string(i), b = "t" + std::to_string(j);
  switch (kind) {
    case RootKind::diff: return a + "-" + b;
    case RootKind::sum: return a + "+" + b;
    case RootKind::short_: return a;
    case RootKind::long_: return "2" + a;
  }
  return "?";
}

std::string ThetaRoot::eps_str(const OrderSpec& o) const {
  auto term = [&](int idx, int sgn, bool first) {
    std::string s = sgn < 0 ? "-" : (first ? "" : "+");
    return s + "e" + std::to_string(idx);
  };
  const int si = o.sign(i), sj = o.sign(j);
  switch (kind) {
    case RootKind::diff: return term(i, si, true) + term(j, -sj, false);
    case RootKind::sum: return term(i, si, true) + term(j, sj, false);
    case RootKind::short_: return term(i, si, true);
    case RootKind::long_: return (si < 0 ? "-2" : "2") + std::string("e") + std::to_string(i);
  }
  return "?";
}

std::vector<ThetaRoot> Cascade::betas() const {
  std::vector<ThetaRoot> out;
  for (const auto& s : steps) out.push_back(s.beta);
  return out;
}

namespace {

// Extremal-element oracle over the remaining indices.
struct Extremes {
  virtual ~Extremes() = default;
  virtual int max_of(const std::set<int>& removed) const = 0;  // 0 if none
  virtual int min_of(const std::set<int>& removed) const = 0;
  virtual bool higher(int a, int b) const = 0;
};

struct InfiniteExtremes : Extremes {
  const OrderSpec& o;
  explicit InfiniteExtremes(const OrderSpec& ord) : o(ord) {}
  int tail_scan(const std::set<int>& removed, int start, int step) const {
    // a cofinite subset of an infinite progression is never empty
    for (int t = start;; t += step) {
      int a = o.tail_at(t);
      if (!removed.count(a)) return a;
    }
  }
  int max_of(const std::set<int>& removed) const override {
    for (int p : o.prefix)
      if (!removed.count(std::abs(p))) return std::abs(p);
    switch (o.tail) {
      case TailRule::increasing: return tail_scan(removed, 1, 1);
      case TailRule::outside_in: return tail_scan(removed, 1, 2);
      case TailRule::decreasing: return 0;
    }
    return 0;
  }
  int min_of(const std::set<int>& removed) const override {
    switch (o.tail) {
      case TailRule::decreasing: return tail_scan(removed, 1, 1);
      case TailRule::outside_in: return tail_scan(removed, 2, 2);
      case TailRule::increasing: return 0;
    }
    return 0;
  }
  bool higher(int a, int b) const override { return o.higher(a, b); }
};

struct FiniteExtremes : Extremes {
  int n;
  explicit FiniteExtremes(int size) : n(size) {}
  int max_of(const std::set<int>& removed) const override {
    for (int a = 1; a <= n; ++a)
      if (!removed.count(a)) return a;
    return 0;
  }
  int min_of(const std::set<int>& removed) const override {
    for (int a = n; a >= 1; --a)
      if (!removed.count(a)) return a;
    return 0;
  }
  bool higher(int a, int b) const override { return a < b; }
};

Cascade run_induction(Type t, const Extremes& ex, int k_max) {
  Cascade c;
  std::set<int> N;
  for (int k = 1; k <= k_max; ++k) {
    ThetaRoot beta;
    std::vector<int> added;
    if (t == Type::A) {
      int i = ex.max_of(N), j = ex.min_of(N);
      if (i && j && i != j) {
        beta = {RootKind::diff, i, j};
        added = {i, j};
      }
    } else if (t == Type::C) {
      int i = ex.max_of(N);
      if (i) {
        beta = {RootKind::long_, i, 0};
        added = {i};
      }
    } else {
      int i = ex.max_of(N);
      if (i) {
        std::set<int> N2 = N;
        N2.insert(i);
        int j = ex.max_of(N2);
        if (j) {
          beta = {RootKind::sum, i, j};
          added = {i, j};
        }
      }
    }
    if (added.empty()) {
      c.exhausted = true;
      break;
    }
    N.insert(added.begin(), added.end());
    c.steps.push_back({k, std::vector<int>(N.begin(), N.end()), beta});
  }
  return c;
}

}  // namespace

Cascade cascade_steps(Type t, const OrderSpec& order, int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  auto issues = validate_order(t, order);
  if (!issues.empty()) throw std::invalid_argument("invalid order: " + issues.front());
  return run_induction(t, InfiniteExtremes(order), k_max);
}

Cascade finite_induction(Type t, int n) {
  return run_induction(t, FiniteExtremes(n), n + 1);
}

std::vector<Root> finite_cascade(Type t, int n) {
  positive_roots(t, n);  // validates the rank
  std::vector<Root> out;
  switch (t) {
    case Type::A:
      for (int i = 1; i <= n / 2; ++i) out.push_back(Root::diff(i, n - i + 1));
      break;
    case Type::C:
      for (int i = 1; i <= n; ++i) out.push_back(Root::long_(i));
      break;
    case Type::B:
    case Type::D:
      for (int i = 1; 2 * i <= n; ++i) {
        out.push_back(Root::diff(2 * i - 1, 2 * i));
        out.push_back(Root::sum(2 * i - 1, 2 * i));
      }
      if (t == Type::B && n % 2 == 1) out.push_back(Root::short_(n));
      break;
  }
  return out;
}

std::vector<Root> b_prime(Type t, int n) {
  auto b = finite_cascade(t, n);
  switch (t) {
    case Type::A:
      if (n % 2 == 0) b.pop_back();
      return b;
    case Type::C:
      b.pop_back();
      return b;
    case Type::B:
    case Type::D: {
      std::vector<Root> out;
      for (int i = 1; 2 * i < n; ++i) out.push_back(Root::sum(2 * i - 1, 2 * i + 1));
      return out;
    }
  }
  return b;
}

ThetaRoot Truncation::to_theta(const Root& r) const {
  switch (r.kind) {
    case RootKind::diff: return {RootKind::diff, labels.at(r.i - 1), labels.at(r.j - 1)};
    case RootKind::sum: return {RootKind::sum, labels.at(r.i - 1), labels.at(r.j - 1)};
    case RootKind::short_: return {RootKind::short_, labels.at(r.i - 1), 0};
    case RootKind::long_: return {RootKind::long_, labels.at(r.i - 1), 0};
  }
  return {};
}

int Truncation::position(int label) const {
  for (size_t p = 0; p < labels.size(); ++p)
    if (labels[p] == label) return static_cast<int>(p) + 1;
  return 0;
}

Root Truncation::to_finite(const ThetaRoot& r) const {
  int p = position(r.i);
  int q = r.j ? position(r.j) : 0;
  if (!p || (r.j && !q)) throw std::invalid_argument("root " + r.str() + " is not inside the truncation");
  Root out;
  switch (r.kind) {
    case RootKind::diff: out = Root::diff(p, q); break;
    case RootKind::sum: out = Root::sum(p, q); break;
    case RootKind::short_: out = Root::short_(p); break;
    case RootKind::long_: out = Root::long_(p); break;
  }
  if ((r.kind == RootKind::diff || r.kind == RootKind::sum) && p >= q)
    throw std::invalid_argument("root " + r.str() + " is not positive for this order");
  return out;
}

Truncation truncate(Type t, const OrderSpec& order, std::vector<int> M) {
  if (M.empty()) throw std::invalid_argument("truncation set must be nonempty");
  std::set<int> uniq(M.begin(), M.end());
  if (uniq.size() != M.size() || *uniq.begin() < 1) throw std::invalid_argument("truncation set must hold distinct positive indices");
  std::sort(M.begin(), M.end(), [&](int a, int b) { return order.higher(a, b); });
  Truncation tr;
  tr.sys = RootSystem::make(t, static_cast<int>(M.size()));
  tr.order = order;
  tr.labels = std::move(M);
  return tr;
}

bool strongly_orthogonal(const RootSystem& sys, const std::vector<Root>& roots) {
  std::set<std::vector<int>> pos;
  for (const Root& r : sys.roots()) pos.insert(r.weight(sys.rank()));
  auto is_root = [&](std::vector<int> w) {
    if (pos.count(w)) return true;
    for (int& x : w) x = -x;
    return pos.count(w) > 0;
  };
  const int n = sys.rank();
  for (size_t a = 0; a < roots.size(); ++a)
    for (size_t b = a + 1; b < roots.size(); ++b) {
      auto wa = roots[a].weight(n), wb = roots[b].weight(n);
      std::vector<int> s(n), d(n);
      for (int k = 0; k < n; ++k) {
        s[k] = wa[k] + wb[k];
        d[k] = wa[k] - wb[k];
      }
      if (is_root(s) || is_root(d)) return false;
    }
  return true;
}

}  // namespace ck
