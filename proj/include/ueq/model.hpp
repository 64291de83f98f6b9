#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ueq/rewrite.hpp"
#include "ueq/tptp.hpp"

namespace ueq {

/// The Herbrand model induced by a rewrite system: the domain is the set of
/// ground terms over the system's signature, and two terms are equal in the
/// model exactly when they share a normal form under the deterministic
/// strategy. Meaningful as a model of the equations when the system is
/// ground convergent; the verification below checks exactly that story.
class HerbrandModel {
 public:
  explicit HerbrandModel(RewriteSystem system);
  // The evaluator points at the owned system; keep the model in place.
  HerbrandModel(const HerbrandModel&) = delete;
  HerbrandModel& operator=(const HerbrandModel&) = delete;

  const RewriteSystem& system() const { return system_; }
  const Signature& signature() const { return system_.signature(); }

  /// The interpretation of a ground term: its normal form.
  Term evaluate(const Term& t);
  /// Whether a ground equation holds in the model.
  bool holds(const Term& lhs, const Term& rhs);

  /// Ordering-check rejections after smallest-constant instantiation, a
  /// diagnostic for how often extra right-hand-side variables mattered.
  std::uint64_t rejected_instantiations() const {
    return eval_.rejected_instantiations();
  }

 private:
  RewriteSystem system_;
  Evaluator eval_;
};

struct DisequationCheck {
  Equation disequation;
  std::string name;
  Term lhs_nf;
  Term rhs_nf;
  bool distinct = false;
};

/// One failing instance of an axiom: the variable assignment and the two
/// normal forms it produced.
struct AxiomFailure {
  Substitution assignment;
  Term lhs_nf;
  Term rhs_nf;
};

struct AxiomCheck {
  Equation axiom;
  std::string name;
  /// Instances covered: (domain size) ^ (variable count), saturating.
  std::uint64_t instances = 0;
  /// Representative tuples actually evaluated. Instantiating with the
  /// normal form of a value gives the same two normal forms as the value
  /// itself, so checking representatives covers every instance.
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// The first few failures (at most `kept_failures`), for reporting.
  std::vector<AxiomFailure> examples;
};

enum class ModelVerdict {
  VerifiedCountermodelAtBound,
  RefutedModel,
  Inconclusive,
};

std::string verdict_str(ModelVerdict v);

/// The full verification record for "this rewrite system is a model of the
/// axioms that separates the goal terms":
///  - every disequation's sides must have distinct normal forms,
///  - every axiom must hold for all instantiations over ground terms with
///    at most `bound` operations (checked over normal-form representatives,
///    which cover all instances up to model equality),
///  - termination and ground confluence must be certified.
/// Any equal disequation refutes the model outright; an axiom failure under
/// certified confluence also refutes it; otherwise missing certificates
/// make the verdict inconclusive.
struct ModelReport {
  ModelVerdict verdict = ModelVerdict::Inconclusive;
  std::size_t bound = 0;
  std::size_t domain_size = 0;           // ground terms enumerated
  std::size_t representative_count = 0;  // distinct normal forms among them
  std::vector<DisequationCheck> disequations;
  std::vector<AxiomCheck> axioms;
  PreorderReport preorder;
  ConfluenceReport confluence;
  std::uint64_t rejected_instantiations = 0;
  std::vector<std::string> reasons;

  std::string summary() const;
};

struct VerifyOptions {
  std::size_t bound = 2;
  std::size_t kept_failures = 5;
  /// Cap on enumerated ground terms (safety valve for large signatures).
  std::size_t domain_cap = 2'000'000;
};

/// Verifies that the model induced by `model`'s rewrite system is a
/// countermodel for `problem` at the given bound. The problem's symbols
/// must be part of the system's signature (saturate_or_load arranges that).
ModelReport verify_countermodel(HerbrandModel& model, const Problem& problem,
                                const VerifyOptions& options = {});

}  // namespace ueq
