#pragma once

// JSON serialization for the report types, kept out of the core headers so
// the core library does not depend on the JSON library. Pulling this header
// in makes `nlohmann::json j = report;` work for every report.

#include <json.hpp>

#include "ueq/completion.hpp"
#include "ueq/finite.hpp"
#include "ueq/model.hpp"
#include "ueq/ordering.hpp"
#include "ueq/rewrite.hpp"
#include "ueq/term.hpp"

namespace ueq {

void to_json(nlohmann::json& j, const Term& t);
void to_json(nlohmann::json& j, const Equation& e);
void to_json(nlohmann::json& j, const Substitution& s);

void to_json(nlohmann::json& j, const OrderingConfig& c);
void to_json(nlohmann::json& j, const OrientationSearch& s);

void to_json(nlohmann::json& j, const RewriteStep& s);
void to_json(nlohmann::json& j, const NormalizationTrace& t);
void to_json(nlohmann::json& j, const PreorderReport& r);
void to_json(nlohmann::json& j, const CriticalPair& p);
void to_json(nlohmann::json& j, const CheckedPair& p);
void to_json(nlohmann::json& j, const ConfluenceReport& r);

void to_json(nlohmann::json& j, const DisequationCheck& c);
void to_json(nlohmann::json& j, const AxiomFailure& f);
void to_json(nlohmann::json& j, const AxiomCheck& c);
void to_json(nlohmann::json& j, const ModelReport& r);

void to_json(nlohmann::json& j, const CompletionStats& s);
void to_json(nlohmann::json& j, const InferenceRecord& r);
void to_json(nlohmann::json& j, const Refuted& r);
void to_json(nlohmann::json& j, const Saturated& s);
void to_json(nlohmann::json& j, const ResourceOut& r);
/// Tagged serialization of whichever outcome the variant holds.
nlohmann::json outcome_json(const CompletionOutcome& outcome);

void to_json(nlohmann::json& j, const FiniteInterpretation& i);
void to_json(nlohmann::json& j, const FiniteScan& s);

}  // namespace ueq
