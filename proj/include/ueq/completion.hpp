#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ueq/rewrite.hpp"
#include "ueq/tptp.hpp"

namespace ueq {

struct CompletionLimits {
  std::uint64_t max_steps = 10'000;  // given-clause iterations
  std::size_t max_equations = 5'000;
  /// Generated equations with a side above this node count are dropped.
  std::size_t max_term_size = 64;
};

struct CompletionStats {
  std::uint64_t steps = 0;
  std::size_t activated = 0;
  std::size_t generated = 0;  // critical pairs queued
  std::size_t simplify_steps = 0;
  std::size_t deleted = 0;  // trivial conclusions and variants
  std::size_t discarded_oversize = 0;
};

enum class InferenceKind { Input, Simplify, CriticalPair, Refutation };

std::string inference_kind_str(InferenceKind k);

/// One step of a completion derivation, carrying enough to be recomputed
/// independently. Ids are indices into the trace.
///  - Input: conclusion is an axiom of the problem; no parents.
///  - Simplify: parents = {target, used}; one rewrite on `on_lhs` side of
///    the target at `position`, applying the used equation in `direction`.
///  - CriticalPair: parents = {outer, inner}; the overlap of the inner
///    equation (in `inner_direction`) into the outer one (in `direction`)
///    at `position` of the outer side rewritten at the root.
///  - Refutation: the sides of disequation `disequation_index` joined.
struct InferenceRecord {
  std::size_t id = 0;
  InferenceKind kind = InferenceKind::Input;
  std::vector<std::size_t> parents;
  Equation conclusion;
  bool on_lhs = true;
  Position position;
  Direction direction = Direction::LeftToRight;
  Direction inner_direction = Direction::LeftToRight;
  std::size_t disequation_index = 0;
};

struct Refuted {
  std::vector<InferenceRecord> trace;
  std::vector<std::size_t> active_ids;  // active set at refutation time
  std::size_t disequation_index = 0;
  Term lhs_nf;
  Term rhs_nf;
  CompletionStats stats;
};

struct Saturated {
  RewriteSystem system;
  std::vector<InferenceRecord> trace;
  std::vector<std::size_t> active_ids;
  CompletionStats stats;
};

struct ResourceOut {
  std::string reason;
  CompletionStats stats;
};

using CompletionOutcome = std::variant<Refuted, Saturated, ResourceOut>;

/// Unfailing completion with the given-clause loop: the selected equation
/// is simplified against the active set (uniformly decreasing steps only),
/// dropped when trivial or a variant, else activated; activation
/// back-simplifies the older equations, queues the ordered critical pairs,
/// and tests each goal disequation for joinability of its sides. Selection
/// alternates smallest-first and oldest-first 5:1.
CompletionOutcome complete(const Problem& problem,
                           const OrderingConfig& config,
                           const CompletionLimits& limits = {});

/// Recomputes every record of a refutation trace from its parents and
/// re-joins the refuted goal under the recorded active set. Returns a
/// description of the first defect, or nullopt when the trace replays.
std::optional<std::string> replay_refutation(const Problem& problem,
                                             const OrderingConfig& config,
                                             const Refuted& refutation);

/// The rewrite system used for model checking: the dump's equations when a
/// dump is given (oriented mode when all of them carry orientations), else
/// whatever completion produces. The problem's signature is merged in so
/// that goal terms can always be evaluated.
std::variant<RewriteSystem, Refuted, ResourceOut> saturate_or_load(
    const Problem& problem, const std::optional<SaturationDump>& dump,
    const OrderingConfig& config, const CompletionLimits& limits = {});

}  // namespace ueq
