// cascade-kit: command line front end.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "cascade_kit/verify.hpp"

using namespace ck;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type = "A";
  int rank = 4;
  std::string order;
  int steps = 5;
  std::string which = "all";
  std::string xi;
  std::uint64_t seed = 1;
  int budget_degree = 3;
  std::string format = "json";
  std::string reading = "adjugate";
  bool all = false;
};

SystemPtr make_system(const Options& o) {
  try {
    return RootSystem::make(parse_type(o.type), o.rank);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

std::vector<Scalar> parse_xi(const std::string& s) {
  std::vector<Scalar> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(parse_rational(item));
    } catch (const std::exception&) {
      throw ConfigError("bad value in --xi: " + item);
    }
  }
  return out;
}

json header(const std::string& cmd) {
  json j;
  j["schema"] = kSchema;
  j["command"] = cmd;
  return j;
}

void emit(const json& j, const Options& o) {
  if (o.format == "text") std::cout << render_text(j);
  else std::cout << j.dump(2) << "\n";
}

int cmd_cascade(const Options& o) {
  json j = header("cascade");
  const Type t = parse_type(o.type);
  j["type"] = std::string(1, type_char(t));
  if (!o.order.empty() || o.rank <= 0) {
    OrderSpec spec;
    try {
      spec = o.order.empty() ? OrderSpec::natural() : OrderSpec::parse(o.order);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    const auto issues = validate_order(t, spec);
    if (!issues.empty()) throw ConfigError("invalid order: " + issues.front());
    const Cascade c = cascade_steps(t, spec, o.steps);
    j["cascade"] = to_json(c, spec);
    std::vector<int> N;
    if (!c.steps.empty()) N = c.steps.back().N_k;
    j["N"] = N;
    j["strongly_orthogonal"] = true;
    if (!c.steps.empty()) {
      // check at the truncation spanned by N
      const Truncation tr = truncate(t, spec, N);
      std::vector<Root> roots;
      for (const auto& b : c.betas()) roots.push_back(tr.to_finite(b));
      j["strongly_orthogonal"] = strongly_orthogonal(*tr.sys, roots);
    }
    emit(j, o);
    return j["strongly_orthogonal"].get<bool>() ? 0 : 1;
  }
  const SystemPtr sys = make_system(o);
  j["system"] = sys->name();
  json fin = json::array(), bp = json::array();
  for (const Root& r : finite_cascade(t, o.rank)) fin.push_back(r.str());
  for (const Root& r : b_prime(t, o.rank)) bp.push_back(r.str());
  j["cascade"] = fin;
  j["b_prime"] = bp;
  j["inductive"] = to_json(finite_induction(t, o.rank), OrderSpec::natural());
  const Check agree = check_cascade_agreement(t, o.rank);
  j["checks"] = json::array({to_json(agree)});
  emit(j, o);
  return agree.passed ? 0 : 1;
}

OddReading parse_reading(const std::string& s) {
  if (s == "literal") return OddReading::literal;
  if (s == "cofactor") return OddReading::cofactor;
  if (s == "adjugate") return OddReading::adjugate;
  throw ConfigError("unknown reading: " + s);
}

json generator_json(const SystemPtr& sys, const std::string& label, const SymPoly& symbol, bool element,
                    bool canonical = true) {
  json g;
  g["label"] = label;
  g["degree"] = symbol.degree();
  g["weight"] = symbol.weight();
  g["symbol"] = to_json(symbol);
  if (element) {
    const UeaElement u =
        canonical ? canonical_generator(sys, std::stoi(label.substr(label.find(':') + 1))) : symmetrize(symbol);
    g["element"] = to_json(u);
    g["central"] = is_central(u);
  }
  return g;
}

int cmd_gens(const Options& o) {
  const SystemPtr sys = make_system(o);
  json j = header("gens");
  j["system"] = sys->name();
  const Type t = sys->type();
  const int m = cascade_size(t, sys->rank());
  json gens = json::array();
  auto index_of = [&](const std::string& w, const std::string& prefix) {
    int i;
    try {
      i = std::stoi(w.substr(prefix.size()));
    } catch (const std::exception&) {
      throw ConfigError("bad generator index in " + w);
    }
    if (i < 1 || i > m) throw ConfigError("index out of range 1.." + std::to_string(m));
    return i;
  };
  if (o.which == "all") {
    for (int i = 1; i <= m; ++i) gens.push_back(generator_json(sys, generator_label(t, i), xi_symbol(sys, i), o.all));
  } else if (o.which.rfind("delta-alpha:", 0) == 0) {
    if (t != Type::A && t != Type::C) throw ConfigError("delta-alpha is defined for A and C");
    Root a;
    try {
      a = Root::parse(o.which.substr(12));
      sys->require(a);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    json g;
    const CascadeLevel lv = cascade_level(*sys, a);
    g["label"] = o.which;
    g["level"] = lv.k;
    g["rows"] = lv.R_alpha;
    g["cols"] = lv.C_alpha;
    g["symbol"] = to_json(delta_alpha_symbol(sys, a));
    gens.push_back(g);
  } else {
    const auto colon = o.which.find(':');
    if (colon == std::string::npos) throw ConfigError("--which expects delta:i, p:i, d:i, delta-alpha:root or all");
    const std::string kind = o.which.substr(0, colon + 1);
    const int i = index_of(o.which, kind);
    if (kind == "delta:") {
      if (t != Type::A && t != Type::C) throw ConfigError("delta:i is defined for A and C");
      gens.push_back(generator_json(sys, o.which, delta_symbol(sys, i), o.all));
    } else if (kind == "p:") {
      if ((t != Type::B && t != Type::D) || i % 2) throw ConfigError("p:i needs type B or D and an even i");
      gens.push_back(generator_json(sys, o.which, pfaffian_symbol(sys, i), o.all));
    } else if (kind == "d:") {
      if ((t != Type::B && t != Type::D) || i % 2 == 0) throw ConfigError("d:i needs type B or D and an odd i");
      const OddReading r = parse_reading(o.reading);
      if (is_bordered(t, sys->rank(), i)) {
        gens.push_back(generator_json(sys, o.which, bordered_symbol(sys, i), o.all));
      } else {
        json g = generator_json(sys, o.which, odd_formula_symbol(sys, i, r), o.all, r == default_odd_reading());
        g["reading"] = o.reading;
        gens.push_back(g);
      }
    } else {
      throw ConfigError("unknown generator kind: " + kind);
    }
  }
  j["generators"] = gens;
  emit(j, o);
  if (o.all)
    for (const auto& g : gens)
      if (g.contains("central") && !g["central"].get<bool>()) return 1;
  return 0;
}

int cmd_verify(const Options& o) {
  const SystemPtr sys = make_system(o);
  Report r = verify_suite(sys, o.seed);
  if (o.all) {
    r.checks.push_back(check_product_formula(sys, o.seed));
    r.checks.push_back(check_independence(sys, o.seed));
    if (sys->type() == Type::A || sys->type() == Type::C) {
      r.checks.push_back(check_roundtrip(sys, o.seed));
      r.checks.push_back(check_polarization(sys, o.seed));
      r.checks.push_back(check_weyl(sys, o.seed));
    }
    if (sys->type() == Type::D && sys->rank() % 2 == 0) r.checks.push_back(check_d_eval(sys->rank() / 2, o.seed));
  }
  json j = header("verify");
  j["system"] = sys->name();
  j["seed"] = o.seed;
  j["report"] = r.to_json();
  if (const Check* f = r.first_failure()) j["counterexample"] = to_json(*f);
  emit(j, o);
  return r.passed() ? 0 : 1;
}

int cmd_eval(const Options& o) {
  const SystemPtr sys = make_system(o);
  const Type t = sys->type();
  const int m = cascade_size(t, sys->rank());
  std::vector<Scalar> xi;
  if (o.xi.empty()) {
    Rng rng(o.seed);
    xi = random_kostant(rng, m);
  } else {
    xi = parse_xi(o.xi);
  }
  if (static_cast<int>(xi.size()) != m)
    throw ConfigError("--xi needs " + std::to_string(m) + " values for " + sys->name());
  json j = header("eval");
  j["system"] = sys->name();
  json xs = json::array();
  for (const auto& x : xi) xs.push_back(x.str());
  j["xi"] = xs;
  bool ok = true;
  json exps = json::array();
  const bool all_nonzero = std::none_of(xi.begin(), xi.end(), [](const Scalar& s) { return s.is_zero(); });
  for (int i = 1; i <= m; ++i) {
    json e{{"i", i}};
    try {
      const ProductFormula p = eval_product_formula(*sys, i, xi);
      e["exponents"] = p.exponents;
      e["product"] = p.value.str();
      const Scalar direct = eval_sym(xi_symbol(sys, i), cascade_form(*sys, xi));
      e["xi_i"] = direct.str();
      if (all_nonzero) e["ratio"] = (direct / p.value).str();
    } catch (const std::domain_error& err) {
      e["error"] = err.what();
      ok = false;
    }
    exps.push_back(e);
  }
  j["product_formula"] = exps;
  if (t == Type::A || t == Type::C) {
    const ScalarSequence sc = c_scalars(sys, xi);
    json cs = json::array();
    for (int k = 0; k <= m; ++k) {
      json e{{"k", k}, {"c_k", sc.c[k].str()}, {"s_k", sc.s[k].str()}};
      if (k) {
        e["stated_sign"] = sc.stated_sign[k];
        e["antidiagonal_sign"] = sc.antidiagonal_sign[k];
        e["sign_matches_stated"] = sc.s[k].sign() == sc.stated_sign[k];
      }
      cs.push_back(e);
    }
    j["scalars"] = cs;
    try {
      const auto back = reconstruct_xi(sys, sc.c);
      j["roundtrip"] = back == xi;
      ok = ok && back == xi;
    } catch (const std::domain_error& err) {
      j["roundtrip"] = false;
      j["roundtrip_error"] = err.what();
      ok = false;
    }
  }
  emit(j, o);
  return ok ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  const SystemPtr sys = make_system(o);
  const int m = cascade_size(sys->type(), sys->rank());
  json j = header("oracle");
  j["system"] = sys->name();
  Check c;
  if (o.all || o.which == "all") {
    c = check_oracle(sys);
  } else {
    int i;
    try {
      i = std::stoi(o.which);
    } catch (const std::exception&) {
      throw ConfigError("--which expects a minor size or all");
    }
    if (i < 1 || i > m) throw ConfigError("minor size out of range 1.." + std::to_string(m));
    const OracleReport r = oracle_compare(sys, i);
    c.id = "oracle";
    c.system = sys->name();
    c.passed = r.passed();
    c.data["minors"] = json::array({{{"i", r.i}, {"k_i", r.k_i}, {"order", r.order}, {"expected_order", r.expected_order},
                                     {"expected", r.expected}, {"match", r.match},
                                     {"scalar", r.match ? r.scalar.str() : ""}}});
    if (!c.passed) c.data["counterexample"] = r.detail.empty() ? "order mismatch" : r.detail;
  }
  j["report"] = to_json(c);
  if (o.format == "text") {
    std::cout << sys->name() << " oracle\n";
    for (const auto& r : c.data["minors"])
      std::cout << "  i=" << r["i"] << " k_i=" << r["k_i"] << " order=" << r["order"] << "/" << r["expected_order"]
                << " " << (r["match"].get<bool>() ? "PASS" : "FAIL") << " expected " << r["expected"].get<std::string>()
                << " scalar " << r["scalar"].get<std::string>() << "\n";
  } else {
    emit(j, o);
  }
  return c.passed ? 0 : 1;
}

int cmd_center_brute(const Options& o) {
  const SystemPtr sys = make_system(o);
  Check c;
  try {
    c = check_center_brute(sys, o.budget_degree);
  } catch (const std::length_error& e) {
    throw ConfigError(e.what());
  }
  json j = header("center-brute");
  j["system"] = sys->name();
  j["report"] = to_json(c);
  emit(j, o);
  return c.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kostant cascades, central generators and Weyl-structure checks for nilradicals of classical Lie algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool system) {
    if (system) {
      sub->add_option("--type", o.type, "root system type")->check(CLI::IsMember({"A", "B", "C", "D", "a", "b", "c", "d"}));
      sub->add_option("--rank", o.rank, "number of epsilon coordinates");
    }
    sub->add_option("--seed", o.seed, "seed for randomized sweeps");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* cascade = app.add_subcommand("cascade", "finite cascade at --rank, or the inductive cascade of --order");
  common(cascade, true);
  cascade->add_option("--order", o.order, "order DSL: natural, outside-in, prefix:1,3;tail:decreasing");
  cascade->add_option("--steps", o.steps, "number of induction steps")->check(CLI::NonNegativeNumber);
  auto* gens = app.add_subcommand("gens", "symbols of the central generators");
  common(gens, true);
  gens->add_option("--which", o.which, "delta:i, p:i, d:i, delta-alpha:root or all");
  gens->add_option("--reading", o.reading, "odd B/D formula: adjugate, literal or cofactor");
  gens->add_flag("--all", o.all, "also build the U(n) elements and test centrality");
  auto* verify = app.add_subcommand("verify", "realization, centrality, commutator sweeps and stability");
  common(verify, true);
  verify->add_flag("--all", o.all, "also run evaluation, roundtrip, polarization and Weyl checks");
  auto* eval = app.add_subcommand("eval", "scalars c_k, product formula exponents and reconstruction");
  common(eval, true);
  eval->add_option("--xi", o.xi, "comma separated rationals, one per cascade root");
  auto* oracle = app.add_subcommand("oracle", "compare generators with minors of exp(t x)");
  common(oracle, true);
  oracle->add_option("--which", o.which, "minor size i or all");
  oracle->add_flag("--all", o.all, "all minor sizes");
  auto* brute = app.add_subcommand("center-brute", "solve for the center up to a degree and compare with the generators");
  common(brute, true);
  brute->add_option("--budget-degree", o.budget_degree, "maximal filtration degree")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (char& ch : o.type) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  try {
    if (*cascade) return cmd_cascade(o);
    if (*gens) return cmd_gens(o);
    if (*verify) return cmd_verify(o);
    if (*eval) return cmd_eval(o);
    if (*oracle) return cmd_oracle(o);
    if (*brute) return cmd_center_brute(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
