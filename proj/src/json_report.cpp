#include "ueq/json_report.hpp"

using nlohmann::json;

namespace ueq {

void to_json(json& j, const Term& t) { j = t.str(); }

void to_json(json& j, const Equation& e) {
  j = json{{"lhs", e.lhs.str()}, {"rhs", e.rhs.str()}};
}

void to_json(json& j, const Substitution& s) {
  j = json::object();
  for (const auto& [var, t] : s.bindings()) j[var] = t.str();
}

void to_json(json& j, const OrderingConfig& c) {
  j = json{{"kind", c.kind == OrderingConfig::Kind::Kbo ? "kbo" : "lpo"},
           {"precedence", c.precedence.str()}};
  if (c.kind == OrderingConfig::Kind::Kbo) {
    json weights = json::object();
    for (const auto& [name, w] : c.kbo.weights) weights[name] = w;
    j["weights"] = weights;
    j["variable_weight"] = c.kbo.variable_weight;
  }
}

void to_json(json& j, const OrientationSearch& s) {
  j = json{{"found", s.config.has_value()},
           {"budget_exhausted", s.budget_exhausted},
           {"candidates_tried", s.candidates_tried}};
  if (s.config) j["config"] = *s.config;
}

void to_json(json& j, const RewriteStep& s) {
  j = json{{"position", position_str(s.position)},
           {"equation", s.equation_index},
           {"direction", direction_str(s.direction)},
           {"substitution", s.substitution},
           {"redex", s.redex},
           {"contractum", s.contractum}};
}

void to_json(json& j, const NormalizationTrace& t) {
  j = json{{"input", t.terms.front()},
           {"result", t.result()},
           {"terms", t.terms},
           {"steps", t.steps},
           {"rejected_instantiations", t.rejected_instantiations}};
}

void to_json(json& j, const PreorderReport& r) {
  json cs = json::array();
  for (Cmp c : r.comparisons) cs.push_back(cmp_str(c));
  j = json{{"comparisons", cs},
           {"oriented_count", r.oriented_count},
           {"all_oriented", r.all_oriented()}};
}

void to_json(json& j, const CriticalPair& p) {
  j = json{{"peak", p.peak},
           {"left", p.left},
           {"right", p.right},
           {"outer", p.outer_index},
           {"inner", p.inner_index},
           {"outer_direction", direction_str(p.outer_direction)},
           {"inner_direction", direction_str(p.inner_direction)},
           {"position", position_str(p.position)},
           {"trivial", p.trivial}};
}

void to_json(json& j, const CheckedPair& p) {
  j = json{{"pair", p.pair},
           {"joinable", p.joinable},
           {"left_nf", p.left_nf},
           {"right_nf", p.right_nf}};
}

void to_json(json& j, const ConfluenceReport& r) {
  j = json{{"certified", r.certified},
           {"termination_certified", r.termination_certified},
           {"pairs", r.pairs},
           {"reasons", r.reasons}};
}

void to_json(json& j, const DisequationCheck& c) {
  j = json{{"disequation", c.disequation},
           {"name", c.name},
           {"lhs_nf", c.lhs_nf},
           {"rhs_nf", c.rhs_nf},
           {"distinct", c.distinct}};
}

void to_json(json& j, const AxiomFailure& f) {
  j = json{{"assignment", f.assignment},
           {"lhs_nf", f.lhs_nf},
           {"rhs_nf", f.rhs_nf}};
}

void to_json(json& j, const AxiomCheck& c) {
  j = json{{"axiom", c.axiom},     {"name", c.name},
           {"instances", c.instances}, {"checked", c.checked},
           {"failures", c.failures},   {"examples", c.examples}};
}

void to_json(json& j, const ModelReport& r) {
  j = json{{"verdict", verdict_str(r.verdict)},
           {"bound", r.bound},
           {"domain_size", r.domain_size},
           {"representative_count", r.representative_count},
           {"disequations", r.disequations},
           {"axioms", r.axioms},
           {"preorder", r.preorder},
           {"confluence", r.confluence},
           {"rejected_instantiations", r.rejected_instantiations},
           {"reasons", r.reasons}};
}

void to_json(json& j, const CompletionStats& s) {
  j = json{{"steps", s.steps},
           {"activated", s.activated},
           {"generated", s.generated},
           {"simplify_steps", s.simplify_steps},
           {"deleted", s.deleted},
           {"discarded_oversize", s.discarded_oversize}};
}

void to_json(json& j, const InferenceRecord& r) {
  j = json{{"id", r.id},
           {"kind", inference_kind_str(r.kind)},
           {"parents", r.parents},
           {"conclusion", r.conclusion}};
  switch (r.kind) {
    case InferenceKind::Input:
      break;
    case InferenceKind::Simplify:
      j["on_lhs"] = r.on_lhs;
      j["position"] = position_str(r.position);
      j["direction"] = direction_str(r.direction);
      break;
    case InferenceKind::CriticalPair:
      j["position"] = position_str(r.position);
      j["direction"] = direction_str(r.direction);
      j["inner_direction"] = direction_str(r.inner_direction);
      break;
    case InferenceKind::Refutation:
      j["disequation_index"] = r.disequation_index;
      break;
  }
}

void to_json(json& j, const Refuted& r) {
  j = json{{"trace", r.trace},
           {"active_ids", r.active_ids},
           {"disequation_index", r.disequation_index},
           {"lhs_nf", r.lhs_nf},
           {"rhs_nf", r.rhs_nf},
           {"stats", r.stats}};
}

void to_json(json& j, const Saturated& s) {
  json eqs = json::array();
  for (const Equation& e : s.system.equations()) eqs.push_back(e);
  j = json{{"equations", eqs},
           {"trace_length", s.trace.size()},
           {"active_ids", s.active_ids},
           {"stats", s.stats}};
}

void to_json(json& j, const ResourceOut& r) {
  j = json{{"reason", r.reason}, {"stats", r.stats}};
}

json outcome_json(const CompletionOutcome& outcome) {
  json j;
  if (const auto* r = std::get_if<Refuted>(&outcome)) {
    j = *r;
    j["outcome"] = "refuted";
  } else if (const auto* s = std::get_if<Saturated>(&outcome)) {
    j = *s;
    j["outcome"] = "saturated";
  } else {
    j = std::get<ResourceOut>(outcome);
    j["outcome"] = "resource_out";
  }
  return j;
}

void to_json(json& j, const FiniteInterpretation& i) {
  json tables = json::object();
  for (std::size_t k = 0; k < i.signature.symbols().size(); ++k)
    tables[i.signature.symbols()[k].name] = i.tables[k];
  j = json{{"size", i.size}, {"tables", tables}};
}

void to_json(json& j, const FiniteScan& s) {
  j = json{{"max_size", s.max_size}, {"witness_found", s.witness.has_value()}};
  if (s.witness) {
    j["witness_size"] = s.witness_size;
    j["witness"] = *s.witness;
  }
}

}  // namespace ueq
