// ueq: ordered-rewriting models for unit-equational problems.
//
// Subcommands: normalize, check-model, saturate, export-trs, finite, etp.
// Exit codes are part of the interface:
//   0  success (normal form printed, countermodel verified, witness found, ...)
//   1  fragment violation, or export-trs given an unorientable system
//   2  parse, file or configuration error (including bad flags)
//   3  check-model: the system is not a model (refuted_model)
//   4  check-model: verification incomplete (inconclusive)
//   5  resource limit hit
//   6  finite: no model up to the requested size
//   7  saturate: disequation refuted (the implication holds)

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ueq/completion.hpp"
#include "ueq/errors.hpp"
#include "ueq/etp.hpp"
#include "ueq/finite.hpp"
#include "ueq/json_report.hpp"
#include "ueq/model.hpp"
#include "ueq/ordering.hpp"
#include "ueq/rewrite.hpp"
#include "ueq/term.hpp"
#include "ueq/tptp.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ueq::ConfigError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw ueq::ConfigError("cannot write file: " + output_path);
  out << content;
}

void emit_json(const std::string& output_path, const json& j) {
  emit(output_path, j.dump(2) + "\n");
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Symbol names on the command line may carry TPTP quotes: '*' means *.
std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '\'' && s.back() == '\'')
    return s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> parse_precedence_chain(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, '>')) {
    std::string name = unquote(trim(item));
    if (name.empty())
      throw ueq::ConfigError("empty symbol in precedence: " + text);
    out.push_back(name);
  }
  if (out.empty()) throw ueq::ConfigError("empty precedence");
  return out;
}

std::map<std::string, std::uint64_t> parse_weights(const std::string& text) {
  std::map<std::string, std::uint64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ueq::ConfigError("weights must look like sym=N,sym=N: " + text);
    std::string name = unquote(trim(item.substr(0, eq)));
    std::string value = trim(item.substr(eq + 1));
    try {
      out[name] = std::stoull(value);
    } catch (const std::exception&) {
      throw ueq::ConfigError("bad weight for " + name + ": " + value);
    }
  }
  return out;
}

// Ordering selection shared by the rewriting commands. Precedence of the
// sources, most specific first: --lpo/--kbo shorthands, --ordering with
// --precedence/--weights, --ordering-config (or $UEQ_ORDERING), and finally
// the default (KBO, weights 1, reverse declaration order). --auto-orient
// replaces the precedence with a searched one.
struct OrderingFlags {
  std::string lpo_chain;
  std::string kbo_chain;
  std::string kind;  // "kbo" or "lpo"
  std::string precedence;
  std::string weights;
  std::uint64_t variable_weight = 1;
  bool auto_orient = false;
  std::string config_file;
};

void add_ordering_flags(CLI::App* cmd, OrderingFlags& f) {
  cmd->add_option("--lpo", f.lpo_chain,
                  "use LPO with this precedence, e.g. \"f>b>a\"");
  cmd->add_option("--kbo", f.kbo_chain,
                  "use KBO (weights 1) with this precedence");
  cmd->add_option("--ordering", f.kind, "ordering kind: kbo or lpo")
      ->check(CLI::IsMember({"kbo", "lpo"}));
  cmd->add_option("--precedence", f.precedence,
                  "precedence chain, e.g. \"f>b>a\"");
  cmd->add_option("--weights", f.weights, "KBO weights, e.g. \"f=2,a=1\"");
  cmd->add_option("--var-weight", f.variable_weight,
                  "KBO variable weight (default 1)");
  cmd->add_flag("--auto-orient", f.auto_orient,
                "search for a precedence that orients every equation");
  cmd->add_option("--ordering-config", f.config_file,
                  "JSON ordering config file")
      ->envname("UEQ_ORDERING");
}

ueq::OrderingConfig::Kind kind_of(const std::string& name) {
  return name == "lpo" ? ueq::OrderingConfig::Kind::Lpo
                       : ueq::OrderingConfig::Kind::Kbo;
}

// Precedence over the whole signature: the searched chain first, then any
// signature symbols the equations never mention (they are unconstrained;
// appending keeps the found orientation).
ueq::OrderingConfig cover_signature(ueq::OrderingConfig cfg,
                                    const ueq::Signature& sig) {
  std::vector<std::string> chain = cfg.precedence.descending();
  for (const ueq::Symbol& s : sig.symbols())
    if (!cfg.precedence.known(s.name)) chain.push_back(s.name);
  cfg.precedence = ueq::Precedence(std::move(chain));
  return cfg;
}

ueq::OrderingConfig auto_orient_config(ueq::OrderingConfig::Kind kind,
                                       const std::vector<ueq::Equation>& eqs,
                                       const ueq::Signature& sig,
                                       ueq::OrientationSearch* search_out) {
  ueq::OrientationSearch search = ueq::find_orientation(eqs, kind);
  if (search_out) *search_out = search;
  if (!search.config)
    throw ueq::ConfigError(
        search.budget_exhausted
            ? "auto-orientation budget exhausted without a witness"
            : "no precedence orients every equation (tried " +
                  std::to_string(search.candidates_tried) + " candidates)");
  return cover_signature(*search.config, sig);
}

ueq::OrderingConfig load_ordering_config(const std::string& path,
                                         const ueq::Signature& sig) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ueq::ConfigError("bad ordering config " + path + ": " + e.what());
  }
  ueq::OrderingConfig cfg = ueq::default_ordering(sig);
  try {
    if (j.contains("kind")) cfg.kind = kind_of(j.at("kind").get<std::string>());
    if (j.contains("precedence")) {
      std::vector<std::string> chain;
      if (j.at("precedence").is_string())
        chain = parse_precedence_chain(j.at("precedence").get<std::string>());
      else
        for (const auto& item : j.at("precedence"))
          chain.push_back(item.get<std::string>());
      cfg.precedence = ueq::Precedence(std::move(chain));
    }
    if (j.contains("weights"))
      for (const auto& [name, w] : j.at("weights").items())
        cfg.kbo.weights[name] = w.get<std::uint64_t>();
    if (j.contains("variable_weight"))
      cfg.kbo.variable_weight = j.at("variable_weight").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ueq::ConfigError("bad ordering config " + path + ": " + e.what());
  }
  return cfg;
}

ueq::OrderingConfig resolve_ordering(
    const OrderingFlags& f, const ueq::Signature& sig,
    const std::vector<ueq::Equation>& equations,
    ueq::OrientationSearch* search_out = nullptr) {
  if (f.auto_orient) {
    if (!f.lpo_chain.empty() || !f.kbo_chain.empty() || !f.precedence.empty())
      throw ueq::ConfigError(
          "--auto-orient conflicts with an explicit precedence");
    return auto_orient_config(kind_of(f.kind.empty() ? "lpo" : f.kind),
                              equations, sig, search_out);
  }
  ueq::OrderingConfig cfg = ueq::default_ordering(sig);
  if (!f.lpo_chain.empty()) {
    cfg.kind = ueq::OrderingConfig::Kind::Lpo;
    cfg.precedence = ueq::Precedence(parse_precedence_chain(f.lpo_chain));
  } else if (!f.kbo_chain.empty()) {
    cfg.kind = ueq::OrderingConfig::Kind::Kbo;
    cfg.precedence = ueq::Precedence(parse_precedence_chain(f.kbo_chain));
  } else {
    if (!f.config_file.empty()) cfg = load_ordering_config(f.config_file, sig);
    if (!f.kind.empty()) cfg.kind = kind_of(f.kind);
    if (!f.precedence.empty())
      cfg.precedence = ueq::Precedence(parse_precedence_chain(f.precedence));
  }
  if (!f.weights.empty())
    for (const auto& [name, w] : parse_weights(f.weights))
      cfg.kbo.weights[name] = w;
  cfg.kbo.variable_weight = f.variable_weight;
  return cfg;
}

// ---------------------------------------------------------------------------
// normalize

struct NormalizeArgs {
  std::string problem_path;
  std::string dump_path;
  std::vector<std::string> inline_eqs;
  std::string term_text;
  std::string output;
  bool as_json = false;
  OrderingFlags ordering;
};

int cmd_normalize(const NormalizeArgs& a) {
  ueq::Signature sig;
  std::vector<ueq::Equation> equations;
  ueq::RewriteMode mode = ueq::RewriteMode::Ordered;

  if (!a.problem_path.empty()) {
    ueq::Problem p = ueq::parse_problem(read_file(a.problem_path));
    sig.extend(p.signature);
    equations.insert(equations.end(), p.axioms.begin(), p.axioms.end());
  }
  if (!a.dump_path.empty()) {
    ueq::SaturationDump d = ueq::parse_saturation(read_file(a.dump_path));
    sig.extend(d.signature);
    std::vector<ueq::Equation> eqs = d.equations_only();
    if (equations.empty() && a.inline_eqs.empty() && !eqs.empty() &&
        d.all_oriented())
      mode = ueq::RewriteMode::Oriented;
    equations.insert(equations.end(), eqs.begin(), eqs.end());
  }
  for (const std::string& text : a.inline_eqs)
    equations.push_back(ueq::parse_equation_text(text, &sig));
  ueq::Term input = ueq::parse_term_text(a.term_text, &sig);

  ueq::OrderingConfig cfg = resolve_ordering(a.ordering, sig, equations);
  ueq::RewriteSystem system(equations, cfg, mode, &sig);
  ueq::NormalizationTrace trace = ueq::normalize(system, input);

  if (a.as_json) {
    json j = trace;
    j["ordering"] = cfg;
    emit_json(a.output, j);
    return 0;
  }
  std::string out = trace.terms.front().str() + "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ueq::RewriteStep& s = trace.steps[i];
    out += "  => " + trace.terms[i + 1].str() + "   (eq " +
           std::to_string(s.equation_index) + " " +
           ueq::direction_str(s.direction) + " at " +
           ueq::position_str(s.position) + ")\n";
  }
  out += "normal form: " + trace.result().str() + "\n";
  emit(a.output, out);
  return 0;
}

// ---------------------------------------------------------------------------
// check-model

struct CheckModelArgs {
  std::string problem_path;
  std::string dump_path;
  std::size_t bound = 2;
  std::size_t kept_failures = 5;
  std::string output;
  bool as_json = false;
  OrderingFlags ordering;
};

int cmd_check_model(const CheckModelArgs& a) {
  ueq::Problem problem = ueq::parse_problem(read_file(a.problem_path));
  ueq::SaturationDump dump = ueq::parse_saturation(read_file(a.dump_path));

  ueq::Signature merged = problem.signature;
  merged.extend(dump.signature);
  ueq::OrderingConfig cfg =
      resolve_ordering(a.ordering, merged, dump.equations_only());

  auto loaded = ueq::saturate_or_load(problem, dump, cfg);
  auto* system = std::get_if<ueq::RewriteSystem>(&loaded);
  if (!system) throw ueq::ConfigError("dump produced no rewrite system");

  ueq::HerbrandModel model(std::move(*system));
  ueq::VerifyOptions options;
  options.bound = a.bound;
  options.kept_failures = a.kept_failures;
  ueq::ModelReport report = ueq::verify_countermodel(model, problem, options);

  if (a.as_json) {
    json j = report;
    j["ordering"] = cfg;
    j["skipped_dump_lines"] = dump.skipped_lines;
    emit_json(a.output, j);
  } else {
    std::string out = report.summary();
    if (dump.skipped_lines > 0)
      out += "note: skipped " + std::to_string(dump.skipped_lines) +
             " unparseable dump line(s)\n";
    emit(a.output, out);
  }
  switch (report.verdict) {
    case ueq::ModelVerdict::VerifiedCountermodelAtBound:
      return 0;
    case ueq::ModelVerdict::RefutedModel:
      return 3;
    case ueq::ModelVerdict::Inconclusive:
      return 4;
  }
  return 4;
}

// ---------------------------------------------------------------------------
// saturate

struct SaturateArgs {
  std::string problem_path;
  std::string output;
  bool as_json = false;
  ueq::CompletionLimits limits;
  OrderingFlags ordering;
};

std::string render_trace(const std::vector<ueq::InferenceRecord>& trace) {
  std::string out;
  for (const ueq::InferenceRecord& r : trace) {
    out += "  [" + std::to_string(r.id) + "] " + ueq::inference_kind_str(r.kind);
    if (!r.parents.empty()) {
      out += "(";
      for (std::size_t i = 0; i < r.parents.size(); ++i)
        out += (i ? ", " : "") + std::to_string(r.parents[i]);
      out += ")";
    }
    out += ": " + r.conclusion.str() + "\n";
  }
  return out;
}

int cmd_saturate(const SaturateArgs& a) {
  ueq::Problem problem = ueq::parse_problem(read_file(a.problem_path));
  ueq::OrderingConfig cfg =
      resolve_ordering(a.ordering, problem.signature, problem.axioms);
  ueq::CompletionOutcome outcome = ueq::complete(problem, cfg, a.limits);

  if (a.as_json) {
    json j = ueq::outcome_json(outcome);
    j["ordering"] = cfg;
    if (const auto* r = std::get_if<ueq::Refuted>(&outcome)) {
      auto defect = ueq::replay_refutation(problem, cfg, *r);
      j["replay_ok"] = !defect.has_value();
      if (defect) j["replay_defect"] = *defect;
    }
    emit_json(a.output, j);
  }

  if (const auto* s = std::get_if<ueq::Saturated>(&outcome)) {
    if (!a.as_json) {
      ueq::SaturationDump dump;
      dump.signature = s->system.signature();
      for (const ueq::Equation& e : s->system.equations())
        dump.equations.push_back(ueq::DumpEquation{
            e, ueq::compare(cfg, e.lhs, e.rhs) == ueq::Cmp::Greater});
      std::string out =
          "% saturated: " + std::to_string(dump.equations.size()) +
          " equation(s), " + std::to_string(s->stats.steps) + " step(s), " +
          std::to_string(s->stats.generated) + " generated, " +
          std::to_string(s->stats.deleted) + " deleted\n";
      out += ueq::write_saturation(dump);
      emit(a.output, out);
    }
    return 0;
  }
  if (const auto* r = std::get_if<ueq::Refuted>(&outcome)) {
    if (!a.as_json) {
      const ueq::Equation& goal = problem.disequations[r->disequation_index];
      std::string out = "refuted disequation " +
                        std::to_string(r->disequation_index) + ": " +
                        goal.lhs.str() + " != " + goal.rhs.str() + "\n";
      out += "joined at: " + r->lhs_nf.str() + "\n";
      out += "derivation:\n" + render_trace(r->trace);
      auto defect = ueq::replay_refutation(problem, cfg, *r);
      out += "replay: " + (defect ? "FAILED: " + *defect
                                  : std::string("verified")) + "\n";
      emit(a.output, out);
    }
    return 7;
  }
  const auto& ro = std::get<ueq::ResourceOut>(outcome);
  if (!a.as_json)
    emit(a.output, "resource limit: " + ro.reason + "\n");
  return 5;
}

// ---------------------------------------------------------------------------
// export-trs

struct ExportArgs {
  std::string problem_path;
  std::string dump_path;
  std::string output;
  OrderingFlags ordering;
};

int cmd_export_trs(const ExportArgs& a) {
  ueq::Signature sig;
  std::vector<ueq::Equation> equations;
  if (!a.dump_path.empty()) {
    ueq::SaturationDump d = ueq::parse_saturation(read_file(a.dump_path));
    sig = d.signature;
    equations = d.equations_only();
  } else {
    ueq::Problem p = ueq::parse_problem(read_file(a.problem_path));
    sig = p.signature;
    equations = p.axioms;
  }
  if (equations.empty()) throw ueq::ConfigError("no equations to export");

  // Unorientable input is an expected outcome here (exit 1), not a config
  // error: orientability is the property this export certifies.
  ueq::OrderingConfig cfg;
  try {
    cfg = resolve_ordering(a.ordering, sig, equations);
  } catch (const ueq::ConfigError& e) {
    if (!a.ordering.auto_orient) throw;
    std::cerr << "not orientable: " << e.what() << "\n";
    return 1;
  }

  std::vector<ueq::Equation> rules;
  for (std::size_t i = 0; i < equations.size(); ++i) {
    const ueq::Equation& e = equations[i];
    switch (ueq::compare(cfg, e.lhs, e.rhs)) {
      case ueq::Cmp::Greater:
        rules.push_back(e);
        break;
      case ueq::Cmp::Less:
        rules.push_back(ueq::Equation{e.rhs, e.lhs});
        break;
      default:
        std::cerr << "not orientable: equation " << i << " (" << e.str()
                  << ") under " << cfg.str() << "\n";
        return 1;
    }
  }
  emit(a.output, ueq::write_trs(rules));
  return 0;
}

// ---------------------------------------------------------------------------
// finite

struct FiniteArgs {
  std::string problem_path;
  std::size_t max_size = 4;
  bool allow_large = false;
  std::string output;
  bool as_json = false;
};

int cmd_finite(const FiniteArgs& a) {
  ueq::Problem problem = ueq::parse_problem(read_file(a.problem_path));
  ueq::FiniteOptions options;
  if (a.allow_large) {
    options.ceiling = 6;
    std::cerr << "warning: raising the finite-model ceiling to 6; the search "
                 "space grows as n^(cells)\n";
  }
  ueq::FiniteScan scan = ueq::scan_finite_models(problem, a.max_size, options);

  bool verified =
      scan.witness ? ueq::satisfies(problem, *scan.witness) : false;
  if (a.as_json) {
    json j = scan;
    j["verified"] = verified;
    emit_json(a.output, j);
  } else if (scan.witness) {
    std::string out = "model of size " + std::to_string(scan.witness_size) +
                      ":\n" + scan.witness->str();
    out += "independent check: " +
           std::string(verified ? "passed" : "FAILED") + "\n";
    emit(a.output, out);
  } else {
    emit(a.output, "no finite model up to size " +
                       std::to_string(scan.max_size) + "\n");
  }
  if (!scan.witness) return 6;
  return verified ? 0 : 4;
}

// ---------------------------------------------------------------------------
// etp

struct EtpListArgs {
  std::size_t max_ops = 4;
  std::string op = "*";
  bool count_only = false;
  std::string output;
  bool as_json = false;
};

int cmd_etp_list(const EtpListArgs& a) {
  std::vector<ueq::Equation> eqs =
      ueq::enumerate_magma_equations(a.max_ops, a.op);
  if (a.as_json) {
    json j;
    j["max_ops"] = a.max_ops;
    j["count"] = eqs.size();
    j["implication_pairs"] = ueq::implication_count(eqs.size());
    if (!a.count_only) {
      json list = json::array();
      for (const ueq::Equation& e : eqs) list.push_back(e.str());
      j["equations"] = list;
    }
    emit_json(a.output, j);
    return 0;
  }
  std::string out;
  if (!a.count_only) {
    for (std::size_t i = 0; i < eqs.size(); ++i)
      out += std::to_string(i + 1) + "\t" + eqs[i].str() + "\n";
  }
  out += "count: " + std::to_string(eqs.size()) + "\n";
  out += "implication pairs: " +
         std::to_string(ueq::implication_count(eqs.size())) + "\n";
  emit(a.output, out);
  return 0;
}

struct EtpGenArgs {
  std::size_t premise = 0;
  std::size_t conclusion = 0;
  std::size_t max_ops = 4;
  std::string op = "*";
  std::string output;
};

int cmd_etp_gen(const EtpGenArgs& a) {
  std::vector<ueq::Equation> eqs =
      ueq::enumerate_magma_equations(a.max_ops, a.op);
  if (a.premise < 1 || a.premise > eqs.size() || a.conclusion < 1 ||
      a.conclusion > eqs.size())
    throw ueq::ConfigError("equation indices must be in 1.." +
                           std::to_string(eqs.size()));
  ueq::Problem p = ueq::implication_problem(eqs[a.premise - 1],
                                            eqs[a.conclusion - 1], a.op);
  emit(a.output, ueq::write_problem(p));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered-rewriting models for unit-equational problems"};
  app.require_subcommand(1);

  NormalizeArgs normalize_args;
  auto* normalize_cmd = app.add_subcommand(
      "normalize", "normalize a ground term under a rewrite system");
  normalize_cmd->add_option("--problem", normalize_args.problem_path,
                            "TPTP problem whose axioms are used as equations");
  normalize_cmd->add_option("--dump", normalize_args.dump_path,
                            "saturation dump providing the equations");
  normalize_cmd->add_option("--eq", normalize_args.inline_eqs,
                            "inline equation, e.g. \"f(X,Y)=f(Y,X)\"");
  normalize_cmd
      ->add_option("--term", normalize_args.term_text, "ground term to reduce")
      ->required();
  normalize_cmd->add_option("--output", normalize_args.output, "output file");
  normalize_cmd->add_flag("--json", normalize_args.as_json, "JSON output");
  add_ordering_flags(normalize_cmd, normalize_args.ordering);

  CheckModelArgs check_args;
  auto* check_cmd = app.add_subcommand(
      "check-model", "verify the model induced by a saturation dump");
  check_cmd->add_option("--problem", check_args.problem_path, "TPTP problem")
      ->required();
  check_cmd->add_option("--dump", check_args.dump_path, "saturation dump")
      ->required();
  check_cmd->add_option("--bound", check_args.bound,
                        "axiom instance bound (ops per ground term)");
  check_cmd->add_option("--kept-failures", check_args.kept_failures,
                        "failing instances kept per axiom");
  check_cmd->add_option("--output", check_args.output, "output file");
  check_cmd->add_flag("--json", check_args.as_json, "JSON output");
  add_ordering_flags(check_cmd, check_args.ordering);

  SaturateArgs saturate_args;
  auto* saturate_cmd = app.add_subcommand(
      "saturate", "run unfailing completion on a problem");
  saturate_cmd->add_option("--problem", saturate_args.problem_path,
                           "TPTP problem")
      ->required();
  saturate_cmd->add_option("--max-steps", saturate_args.limits.max_steps,
                           "given-clause iteration limit");
  saturate_cmd->add_option("--max-equations",
                           saturate_args.limits.max_equations,
                           "total equation limit");
  saturate_cmd->add_option("--max-term-size",
                           saturate_args.limits.max_term_size,
                           "node-count limit per generated side");
  saturate_cmd->add_option("--output", saturate_args.output, "output file");
  saturate_cmd->add_flag("--json", saturate_args.as_json, "JSON output");
  add_ordering_flags(saturate_cmd, saturate_args.ordering);

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand(
      "export-trs", "export oriented rules in TRS format");
  export_cmd->add_option("--problem", export_args.problem_path,
                         "TPTP problem whose axioms are exported");
  export_cmd->add_option("--dump", export_args.dump_path, "saturation dump");
  export_cmd->add_option("--output", export_args.output, "output file");
  add_ordering_flags(export_cmd, export_args.ordering);

  FiniteArgs finite_args;
  auto* finite_cmd = app.add_subcommand(
      "finite", "search for a finite model of sizes 1..N");
  finite_cmd->add_option("--problem", finite_args.problem_path, "TPTP problem")
      ->required();
  finite_cmd->add_option("--max-size", finite_args.max_size,
                         "largest domain size to try (ceiling 4)");
  finite_cmd->add_flag("--allow-large", finite_args.allow_large,
                       "raise the ceiling to the hard maximum of 6");
  finite_cmd->add_option("--output", finite_args.output, "output file");
  finite_cmd->add_flag("--json", finite_args.as_json, "JSON output");

  auto* etp_cmd = app.add_subcommand(
      "etp", "enumerate magma equations and generate implication problems");
  etp_cmd->require_subcommand(1);
  EtpListArgs etp_list_args;
  auto* etp_list_cmd =
      etp_cmd->add_subcommand("list", "list the canonical equations");
  etp_list_cmd->add_option("--max-ops", etp_list_args.max_ops,
                           "operation-count bound (default 4)");
  etp_list_cmd->add_option("--op", etp_list_args.op, "operation symbol");
  etp_list_cmd->add_flag("--count-only", etp_list_args.count_only,
                         "print only the counts");
  etp_list_cmd->add_option("--output", etp_list_args.output, "output file");
  etp_list_cmd->add_flag("--json", etp_list_args.as_json, "JSON output");
  EtpGenArgs etp_gen_args;
  auto* etp_gen_cmd = etp_cmd->add_subcommand(
      "gen", "write the implication problem for a pair of equations");
  etp_gen_cmd->add_option("premise", etp_gen_args.premise,
                          "premise equation index (1-based)")
      ->required();
  etp_gen_cmd->add_option("conclusion", etp_gen_args.conclusion,
                          "conclusion equation index (1-based)")
      ->required();
  etp_gen_cmd->add_option("--max-ops", etp_gen_args.max_ops,
                          "operation-count bound (default 4)");
  etp_gen_cmd->add_option("--op", etp_gen_args.op, "operation symbol");
  etp_gen_cmd->add_option("--output", etp_gen_args.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (normalize_cmd->parsed()) return cmd_normalize(normalize_args);
    if (check_cmd->parsed()) return cmd_check_model(check_args);
    if (saturate_cmd->parsed()) return cmd_saturate(saturate_args);
    if (export_cmd->parsed()) return cmd_export_trs(export_args);
    if (finite_cmd->parsed()) return cmd_finite(finite_args);
    if (etp_cmd->parsed()) {
      if (etp_list_cmd->parsed()) return cmd_etp_list(etp_list_args);
      if (etp_gen_cmd->parsed()) return cmd_etp_gen(etp_gen_args);
    }
  } catch (const ueq::FragmentError& e) {
    std::cerr << "fragment error: " << e.what() << "\n";
    return 1;
  } catch (const ueq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ueq::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 5;
  } catch (const ueq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
