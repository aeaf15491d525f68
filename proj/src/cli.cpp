#include "thetagraph/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "thetagraph/binary_field.hpp"
#include "thetagraph/errors.hpp"
#include "thetagraph/kloosterman.hpp"
#include "thetagraph/quadratic_ring.hpp"
#include "thetagraph/structure_predictor.hpp"
#include "thetagraph/theta_graph.hpp"

namespace thetagraph::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for bad flags or values; maps to exit status 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kMaxKloostermanDegree = 4096;

std::string command_name(Command c) {
  switch (c) {
    case Command::analyze: return "analyze";
    case Command::predict: return "predict";
    case Command::verify: return "verify";
    case Command::kloosterman: return "kloosterman";
    case Command::factor: return "factor";
    case Command::export_dot: return "export-dot";
  }
  return "?";
}

bool field_backed(Command c) {
  return c == Command::analyze || c == Command::predict || c == Command::verify || c == Command::kloosterman ||
         c == Command::export_dot;
}

void require_n(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw usage_error("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

FieldSpec field_for(const RunConfig& cfg) {
  if (!cfg.poly) return FieldSpec::find_irreducible(cfg.n);
  FieldSpec spec = [&] {
    try {
      return FieldSpec::from_modulus(*cfg.poly);
    } catch (const std::invalid_argument& e) {
      throw usage_error(std::string("--poly: ") + e.what());
    }
  }();
  if (spec.degree() != cfg.n) {
    throw usage_error("--poly has degree " + std::to_string(spec.degree()) + ", expected " + std::to_string(cfg.n));
  }
  return spec;
}

Json cycles_json(const std::vector<CycleRecord>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back({{"length", r.length}, {"count", r.count}, {"tree_depth", r.tree_depth}});
  return arr;
}

void print_table(std::ostream& os, TraceClass c, int n, const std::vector<CycleRecord>& rows) {
  os << "Graph " << to_string(c) << "_" << n << "\n";
  os << std::left << std::setw(8) << "length" << std::setw(8) << "count" << "depth\n";
  if (rows.empty()) os << "(no cycles)\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(8) << r.length << std::setw(8) << r.count << r.tree_depth << "\n";
  }
}

std::string target_text(int n, TraceClass c) {
  return "pi^" + std::to_string(n) + (c == TraceClass::A ? " - 1" : " + 1");
}

/// Prediction for one class; B_1 is empty and has no target.
std::optional<PredictedStructure> predicted(int n, TraceClass c) {
  if (c == TraceClass::B && n == 1) return std::nullopt;
  return predict(n, c);
}

int cmd_analyze(const RunConfig& cfg, std::ostream& os) {
  require_n(cfg.n, 1, kMaxGraphDegree);
  const FieldSpec spec = field_for(cfg);
  const GraphSummary s = analyze(build_graph(spec, cfg.threads));
  if (cfg.format == Format::json) {
    Json j{{"command", "analyze"}, {"n", cfg.n}, {"modulus", format_polynomial_hex(spec.modulus())}};
    Json classes = Json::array();
    for (TraceClass c : {TraceClass::A, TraceClass::B}) {
      const ClassSummary& cs = s.of(c);
      classes.push_back({{"class", std::string(to_string(c))},
                         {"vertex_count", cs.vertex_count},
                         {"max_tree_depth", cs.max_tree_depth},
                         {"cycles", cycles_json(cs.cycles)}});
    }
    j["classes"] = std::move(classes);
    os << j.dump(2) << "\n";
    return kExitOk;
  }
  os << "F_2^" << cfg.n << " = F_2[x]/(" << format_polynomial_hex(spec.modulus()) << ")\n\n";
  print_table(os, TraceClass::A, cfg.n, s.a.cycles);
  os << "\n";
  print_table(os, TraceClass::B, cfg.n, s.b.cycles);
  return kExitOk;
}

Json predicted_class_json(int n, TraceClass c, const std::optional<PredictedStructure>& p) {
  Json j{{"class", std::string(to_string(c))}, {"target", target_text(n, c)}};
  if (!p) {
    j["factorization"] = "";
    j["e0"] = 0;
    j["cycles"] = Json::array();
    return j;
  }
  j["factorization"] = to_string(p->factorization);
  j["e0"] = p->e0;
  j["cycles"] = cycles_json(p->totals);
  return j;
}

int cmd_predict(const RunConfig& cfg, std::ostream& os) {
  require_n(cfg.n, 1, kMaxPredictDegree);
  const FieldSpec spec = field_for(cfg);
  const auto a = predicted(cfg.n, TraceClass::A);
  const auto b = predicted(cfg.n, TraceClass::B);
  if (cfg.format == Format::json) {
    Json j{{"command", "predict"}, {"n", cfg.n}, {"modulus", format_polynomial_hex(spec.modulus())}};
    j["classes"] = Json::array({predicted_class_json(cfg.n, TraceClass::A, a),
                                predicted_class_json(cfg.n, TraceClass::B, b)});
    os << j.dump(2) << "\n";
    return kExitOk;
  }
  for (TraceClass c : {TraceClass::A, TraceClass::B}) {
    const auto& p = c == TraceClass::A ? a : b;
    if (c == TraceClass::B) os << "\n";
    if (p) {
      os << target_text(cfg.n, c) << " = " << to_string(p->factorization) << "\n";
    } else {
      os << target_text(cfg.n, c) << " is a unit times pibar\n";
    }
    print_table(os, c, cfg.n, p ? p->totals : std::vector<CycleRecord>{});
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  require_n(cfg.n, 1, kMaxVerifyDegree);
  const FieldSpec spec = field_for(cfg);
  const VerificationReport r = verify(spec, cfg.threads);
  const bool ok = r.all_pass();
  if (cfg.format == Format::json) {
    Json j{{"command", "verify"}, {"n", cfg.n}, {"modulus", format_polynomial_hex(spec.modulus())}};
    j["classes"] = Json::array({predicted_class_json(cfg.n, TraceClass::A, predicted(cfg.n, TraceClass::A)),
                                predicted_class_json(cfg.n, TraceClass::B, predicted(cfg.n, TraceClass::B))});
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["pass"] = ok;
    os << j.dump(2) << "\n";
  } else {
    os << "verify n=" << cfg.n << " modulus " << format_polynomial_hex(spec.modulus()) << "\n";
    for (const auto& c : r.checks) {
      os << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
    os << (ok ? "all checks pass" : "mismatch") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_kloosterman(const RunConfig& cfg, std::ostream& os) {
  require_n(cfg.n, 1, kMaxKloostermanDegree);
  if (cfg.poly && cfg.n > kMaxKloostermanDirectDegree) {
    throw usage_error("--poly needs a direct sum, which is limited to n <= " +
                      std::to_string(kMaxKloostermanDirectDegree));
  }
  const KloostermanReport r = check_congruences(cfg.n);
  std::optional<FieldSpec> spec;
  std::optional<std::int64_t> direct;
  if (cfg.n <= kMaxKloostermanDirectDegree) {
    spec = field_for(cfg);
    direct = kloosterman_direct(*spec, cfg.threads);
  }
  const bool agree = !direct || BigInt(*direct) == r.value;
  const bool ok = agree && r.all_pass();
  if (cfg.format == Format::json) {
    Json j{{"command", "kloosterman"}, {"n", cfg.n}};
    if (spec) j["modulus"] = format_polynomial_hex(spec->modulus());
    j["value"] = r.value.str();
    if (direct) {
      j["direct"] = std::to_string(*direct);
      j["direct_matches_recurrence"] = agree;
    }
    Json checks = Json::array();
    for (const auto& c : r.congruence_checks) {
      checks.push_back({{"modulus", c.modulus.str()}, {"expected_residue", c.expected_residue.str()}, {"pass", c.pass}});
    }
    j["congruences"] = std::move(checks);
    j["pass"] = ok;
    os << j.dump(2) << "\n";
  } else {
    os << "S(" << cfg.n << ") = " << r.value << "\n";
    if (direct) {
      os << (agree ? "PASS  " : "FAIL  ") << "direct sum over " << format_polynomial_hex(spec->modulus()) << " = "
         << *direct << "\n";
    }
    for (const auto& c : r.congruence_checks) {
      os << (c.pass ? "PASS  " : "FAIL  ") << "S = " << c.expected_residue << " mod " << c.modulus << "\n";
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_factor(const RunConfig& cfg, std::ostream& os) {
  QuadInt z;
  std::string label;
  if (cfg.value) {
    try {
      z = parse_quadint(*cfg.value);
    } catch (const std::invalid_argument& e) {
      throw usage_error(std::string("--value: ") + e.what());
    }
    label = to_string(z);
  } else {
    require_n(cfg.n, 1, kMaxPredictDegree);
    const TraceClass c = cfg.sign < 0 ? TraceClass::A : TraceClass::B;
    z = structure_target(cfg.n, c);
    label = target_text(cfg.n, c);
  }
  if (z.is_zero()) throw usage_error("cannot factor 0");
  RingFactorization f;
  try {
    f = factor(z);
  } catch (const std::domain_error& e) {
    throw usage_error(std::string("factor: ") + e.what());
  }
  if (cfg.format == Format::json) {
    Json j{{"command", "factor"}};
    if (!cfg.value) {
      j["n"] = cfg.n;
      j["sign"] = cfg.sign < 0 ? "minus" : "plus";
    }
    j["target"] = label;
    j["element"] = to_string(z);
    j["norm"] = norm(z).str();
    j["unit"] = to_string(f.unit);
    Json factors = Json::array();
    for (const auto& p : f.factors) {
      factors.push_back({{"prime", to_string(p.prime)},
                         {"exponent", p.exponent},
                         {"kind", std::string(to_string(p.kind))},
                         {"rational_prime", p.rational_prime}});
    }
    j["factors"] = std::move(factors);
    j["text"] = to_string(f);
    os << j.dump(2) << "\n";
    return kExitOk;
  }
  os << label << " = " << to_string(f) << "\n";
  os << "norm " << norm(z) << "\n";
  return kExitOk;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& os) {
  require_n(cfg.n, 1, kMaxGraphDegree);
  const FieldSpec spec = field_for(cfg);
  if (cfg.dlog_labels && !spec.is_primitive()) {
    throw usage_error("dlog labeling needs a primitive modulus; " + format_polynomial_hex(spec.modulus()) +
                      " is not");
  }
  os << export_dot(build_graph(spec, cfg.threads), cfg.dlog_labels ? DotLabeling::dlog : DotLabeling::hex);
  return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& os) {
  switch (cfg.command) {
    case Command::analyze: return cmd_analyze(cfg, os);
    case Command::predict: return cmd_predict(cfg, os);
    case Command::verify: return cmd_verify(cfg, os);
    case Command::kloosterman: return cmd_kloosterman(cfg, os);
    case Command::factor: return cmd_factor(cfg, os);
    case Command::export_dot: return cmd_export_dot(cfg, os);
  }
  return kExitUsage;
}

void validate(const RunConfig& cfg) {
  if (cfg.threads < 1) throw usage_error("--threads must be positive");
  if (cfg.poly && !field_backed(cfg.command)) throw usage_error("--poly is not accepted by " + command_name(cfg.command));
  if (cfg.dlog_labels && cfg.command != Command::export_dot) throw usage_error("--labeling is only accepted by export-dot");
  if ((cfg.format == Format::dot) != (cfg.command == Command::export_dot)) {
    throw usage_error(cfg.command == Command::export_dot ? "export-dot only writes dot"
                                                         : "--format dot is only accepted by export-dot");
  }
  if (cfg.value && cfg.command != Command::factor) throw usage_error("--value is only accepted by factor");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::ostringstream buffer;
    const int status = dispatch(config, buffer);
    if (config.out_path) {
      std::ofstream file(*config.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << *config.out_path << " for writing\n";
        return kExitUsage;
      }
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return status;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle and tree structure of x -> x + 1/x over binary fields"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string poly_text, format_text = "table", labeling_text = "hex", sign_text = "minus";
  const std::map<std::string, Command> commands{
      {"analyze", Command::analyze},         {"predict", Command::predict}, {"verify", Command::verify},
      {"kloosterman", Command::kloosterman}, {"factor", Command::factor},   {"export-dot", Command::export_dot}};
  const std::map<std::string, std::string> help{
      {"analyze", "Enumerate the graph and tabulate cycles per class"},
      {"predict", "Predict the tables from the factorization of pi^n -+ 1"},
      {"verify", "Compare enumeration with prediction"},
      {"kloosterman", "Kloosterman sum S(n) with congruence checks"},
      {"factor", "Factor pi^n -+ 1, or --value, in Z[w]"},
      {"export-dot", "Write the graph as Graphviz DOT"}};

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    subs[name] = sub;
    const bool value_form = cmd == Command::factor;
    auto* n_opt = sub->add_option("--n", cfg.n, "Field degree / exponent");
    if (!value_form) n_opt->required();
    sub->add_option("--format", format_text, "table, json or dot")->check(CLI::IsMember({"table", "json", "dot"}));
    sub->add_option("--threads", cfg.threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_path, "Write output to this file");
    if (field_backed(cmd)) sub->add_option("--poly", poly_text, "Modulus: hex (0x25) or exponents (5,2,0)");
    if (cmd == Command::export_dot) {
      sub->add_option("--labeling", labeling_text, "hex or dlog")->check(CLI::IsMember({"hex", "dlog"}));
    }
    if (value_form) {
      auto* sign = sub->add_option("--sign", sign_text, "minus: pi^n - 1, plus: pi^n + 1")
                       ->check(CLI::IsMember({"minus", "plus"}));
      auto* value = sub->add_option("--value", cfg.value, "Element a+b*w to factor instead");
      value->excludes(n_opt)->excludes(sign);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cfg.command = commands.at(name);
  }
  if (cfg.command == Command::factor && !cfg.value && cfg.n == 0) {
    err << "error: factor needs --n or --value\n";
    return kExitUsage;
  }
  if (cfg.command == Command::export_dot && format_text == "table") format_text = "dot";
  cfg.format = format_text == "json" ? Format::json : format_text == "dot" ? Format::dot : Format::table;
  cfg.dlog_labels = labeling_text == "dlog";
  cfg.sign = sign_text == "plus" ? 1 : -1;
  if (!poly_text.empty()) {
    try {
      cfg.poly = parse_polynomial(poly_text);
    } catch (const std::invalid_argument& e) {
      err << "error: --poly: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return run(cfg, out, err);
}

}  // namespace thetagraph::cli
