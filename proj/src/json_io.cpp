#include "cascade_kit/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ck {

json to_json(const Root& r) {
  json j;
  j["kind"] = kind_name(r.kind);
  j["i"] = r.i;
  if (r.kind == RootKind::diff || r.kind == RootKind::sum) j["j"] = r.j;
  return j;
}

Root root_from_json(const json& j) {
  const std::string k = j.at("kind").get<std::string>();
  const int i = j.at("i").get<int>();
  if (k == "diff") return Root::diff(i, j.at("j").get<int>());
  if (k == "sum") return Root::sum(i, j.at("j").get<int>());
  if (k == "short") return Root::short_(i);
  if (k == "long") return Root::long_(i);
  throw std::invalid_argument("unknown root kind: " + k);
}

json to_json(const Scalar& s) {
  json j;
  j["a"] = s.a().get_str();
  j["b"] = s.b().get_str();
  return j;
}

Scalar scalar_from_json(const json& j) {
  return Scalar(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()));
}

json to_json(const Combination& c) {
  const RootSystem& sys = *c.system();
  json terms = json::array();
  for (const auto& [m, v] : c.terms()) {
    json mono = json::array();
    for (size_t k = 0; k < m.size();) {
      size_t e = k;
      while (e < m.size() && m[e] == m[k]) ++e;
      mono.push_back(json::array({to_json(sys.root(factor(m, k))), static_cast<int>(e - k)}));
      k = e;
    }
    terms.push_back({{"coeff", to_json(v)}, {"mono", mono}});
  }
  json j;
  j["terms"] = terms;
  j["text"] = c.str();
  return j;
}

SymPoly sympoly_from_json(const SystemPtr& sys, const json& j) {
  Terms t;
  for (const auto& term : j.at("terms")) {
    std::vector<int> ids;
    for (const auto& f : term.at("mono")) {
      const int id = sys->require(root_from_json(f.at(0)));
      for (int e = f.at(1).get<int>(); e > 0; --e) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    Mono m;
    for (int id : ids) m.push_back(static_cast<char>(id));
    add_term(t, m, scalar_from_json(term.at("coeff")));
  }
  return SymPoly(sys, std::move(t));
}

json to_json(const ThetaRoot& r) {
  json j;
  j["kind"] = kind_name(r.kind);
  j["i"] = r.i;
  if (r.kind == RootKind::diff || r.kind == RootKind::sum) j["j"] = r.j;
  return j;
}

json to_json(const Cascade& c, const OrderSpec& order) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    json st;
    st["k"] = s.k;
    st["N_k"] = s.N_k;
    if (s.beta.i) {
      st["beta_k"] = to_json(s.beta);
      st["beta_text"] = s.beta.eps_str(order);
    } else {
      st["beta_k"] = nullptr;
    }
    steps.push_back(st);
  }
  json j;
  j["order"] = order.str();
  j["steps"] = steps;
  j["exhausted"] = c.exhausted;
  return j;
}

namespace {

void render(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t k = 0; k < j.size(); ++k) render(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

}  // namespace ck
