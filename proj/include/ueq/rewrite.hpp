#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ueq/ordering.hpp"
#include "ueq/term.hpp"

namespace ueq {

/// How equations are turned into rewrite steps on ground terms.
///
/// Ordered: every equation may fire in either direction, but an instance
/// step sigma(l) -> sigma(r) is taken only when sigma(l) is strictly greater
/// in the configured ordering. Right-hand-side variables left unbound by the
/// match are instantiated with the smallest constant before the check.
///
/// Oriented: equations are rules, applied left to right as stored with no
/// ordering check (the orientation annotations of a saturation dump are
/// trusted). Steps that would not change the term are skipped.
enum class RewriteMode { Ordered, Oriented };

enum class Direction { LeftToRight, RightToLeft };

std::string direction_str(Direction d);

/// A set of equations together with an ordering, read as a rewrite system.
/// Equation variables are renamed to canonical names; the signature is
/// inferred from the equations, extended by `extra_signature` when given.
/// When the resulting signature has no constant, a fresh one is invented
/// (and appended to the precedence as its minimum) so that ground rewriting
/// and smallest-constant instantiation are always possible.
class RewriteSystem {
 public:
  RewriteSystem(std::vector<Equation> equations, OrderingConfig config,
                RewriteMode mode = RewriteMode::Ordered,
                const Signature* extra_signature = nullptr);

  const std::vector<Equation>& equations() const { return equations_; }
  const OrderingConfig& ordering() const { return config_; }
  RewriteMode mode() const { return mode_; }
  const Signature& signature() const { return signature_; }
  /// The least constant of the signature under the ordering.
  const Term& least_constant() const { return least_constant_; }
  bool fresh_constant_added() const { return fresh_constant_added_; }

 private:
  std::vector<Equation> equations_;
  OrderingConfig config_;
  RewriteMode mode_;
  Signature signature_;
  Term least_constant_;
  bool fresh_constant_added_ = false;
};

/// One rewrite step somewhere inside a term.
struct RewriteStep {
  Position position;
  std::size_t equation_index = 0;
  Direction direction = Direction::LeftToRight;
  Substitution substitution;  // includes smallest-constant instantiations
  Term redex;                 // the matched instance sigma(l)
  Term contractum;            // sigma(r)
};

struct NormalizeOptions {
  std::uint64_t step_cap = 100'000;
};

/// A full normalization under the deterministic strategy, with every
/// intermediate term: terms[0] is the input, terms[i+1] the result of
/// steps[i], and terms.back() the normal form.
struct NormalizationTrace {
  std::vector<Term> terms;
  std::vector<RewriteStep> steps;
  /// Candidates whose unbound right-hand-side variables were instantiated
  /// with the smallest constant and then failed the ordering check.
  std::uint64_t rejected_instantiations = 0;

  const Term& result() const { return terms.back(); }
};

/// The first step of the deterministic strategy on a ground term, or
/// nullopt at a normal form. The strategy is innermost-leftmost: arguments
/// before the root, left to right; at a redex, equations are tried in input
/// order, left-to-right before right-to-left. Throws FragmentError on
/// non-ground input.
std::optional<RewriteStep> rewrite_step(const RewriteSystem& system,
                                        const Term& t,
                                        std::uint64_t* rejected = nullptr);

/// Normalizes a ground term step by step under the deterministic strategy.
/// Throws ResourceError when the step cap is hit (possible only for
/// oriented mode with a non-terminating dump).
NormalizationTrace normalize(const RewriteSystem& system, const Term& t,
                             const NormalizeOptions& options = {});

/// Memoized normal forms for ground terms. Computes bottom-up (arguments
/// first, then root steps, recursively); this agrees step for step with
/// the deterministic strategy and is the workhorse for bound checks, where
/// subterms repeat massively.
class Evaluator {
 public:
  explicit Evaluator(const RewriteSystem& system,
                     std::uint64_t step_cap = 50'000'000);

  /// Normal form of a ground term. Throws FragmentError on non-ground input.
  Term normal_form(const Term& t);
  bool equal(const Term& s, const Term& t);

  std::size_t memo_size() const { return memo_.size(); }
  std::uint64_t steps_taken() const { return steps_; }
  std::uint64_t rejected_instantiations() const { return rejected_; }

 private:
  Term eval(const Term& t);

  const RewriteSystem& system_;
  std::unordered_map<Term, Term, TermHash> memo_;
  std::uint64_t steps_ = 0;
  std::uint64_t rejected_ = 0;
  std::uint64_t step_cap_;
};

/// Which equations the ordering orients as written.
struct PreorderReport {
  std::vector<Cmp> comparisons;  // compare(lhs, rhs) per equation
  std::size_t oriented_count = 0;

  bool all_oriented() const { return oriented_count == comparisons.size(); }
};

PreorderReport check_preordered(const RewriteSystem& system);

/// An overlap of one rule into a non-variable position of another. The peak
/// rewrites to `left` (inner rule at `position`) and to `right` (outer rule
/// at the root); sides are renamed to canonical variables jointly. In
/// ordered mode, overlaps whose instance is refuted by the ordering for
/// either parent are not emitted.
struct CriticalPair {
  Term peak;
  Term left;
  Term right;
  std::size_t outer_index = 0;  // rule rewriting at the root of the peak
  std::size_t inner_index = 0;  // rule rewriting at `position`
  Direction outer_direction = Direction::LeftToRight;
  Direction inner_direction = Direction::LeftToRight;
  Position position;
  Substitution unifier;  // over the renamed-apart parent variables
  bool trivial = false;  // left == right
};

/// All critical pairs among the system's equations, in deterministic order
/// (outer rule major, inner rule, then position). Root overlaps of a rule
/// with its own renamed copy are excluded. When `only_involving` is given,
/// only pairs with that equation as a parent are produced.
std::vector<CriticalPair> critical_pairs(
    const RewriteSystem& system,
    std::optional<std::size_t> only_involving = std::nullopt);

/// One rewrite step on a possibly open term. Variables are rigid; steps
/// never invent bindings (rules whose applied side keeps unbound variables
/// are skipped). In ordered mode the instance must strictly decrease, which
/// by stability is sound for every ground instance.
struct OpenStep {
  Term result;  // the whole rewritten term
  Position position;
  std::size_t equation_index = 0;
  Direction direction = Direction::LeftToRight;
};

std::optional<OpenStep> open_rewrite_step(const RewriteSystem& system,
                                          const Term& t);

/// Open-term normalization (innermost leftmost), built on open_rewrite_step.
Term normalize_open(const RewriteSystem& system, const Term& t,
                    const NormalizeOptions& options = {});

struct CheckedPair {
  CriticalPair pair;
  bool joinable = false;
  Term left_nf;
  Term right_nf;
};

/// Ground-confluence certification for the system: every equation must be
/// orientable by the ordering (termination), and every nontrivial critical
/// pair of the oriented rules must join. Both together certify confluence
/// on ground terms (Knuth-Bendix and Newman); anything less is reported as
/// not certified, with reasons.
struct ConfluenceReport {
  bool certified = false;
  bool termination_certified = false;
  std::vector<CheckedPair> pairs;
  std::vector<std::string> reasons;
};

ConfluenceReport check_ground_confluence(const RewriteSystem& system);

}  // namespace ueq
