#include "ueq/completion.hpp"

#include <algorithm>

#include "ueq/errors.hpp"

namespace ueq {

std::string inference_kind_str(InferenceKind k) {
  switch (k) {
    case InferenceKind::Input: return "input";
    case InferenceKind::Simplify: return "simplify";
    case InferenceKind::CriticalPair: return "critical_pair";
    case InferenceKind::Refutation: return "refutation";
  }
  return "?";
}

namespace {

std::size_t equation_size(const Equation& e) {
  return e.lhs.node_count() + e.rhs.node_count();
}

/// The working state of one completion run.
class Completion {
 public:
  Completion(const Problem& problem, const OrderingConfig& config,
             const CompletionLimits& limits)
      : problem_(problem), config_(config), limits_(limits) {}

  CompletionOutcome run() {
    for (const Equation& d : problem_.disequations)
      if (!d.lhs.ground() || !d.rhs.ground())
        throw FragmentError("disequations must be ground");

    try {
      for (const Equation& ax : problem_.axioms) {
        std::size_t id = add_record(InferenceRecord{
            0, InferenceKind::Input, {}, rename_equation_canonical(ax)});
        passive_.push_back(id);
      }
      if (auto refuted = check_goals()) return std::move(*refuted);

      while (!passive_.empty()) {
        if (++stats_.steps > limits_.max_steps)
          throw ResourceError("completion exceeded " +
                              std::to_string(limits_.max_steps) + " steps");
        std::size_t id = select();
        id = simplify_fully(id);
        const Equation& e = conclusion(id);
        if (e.lhs == e.rhs || is_variant_of_active(e)) {
          ++stats_.deleted;
          continue;
        }
        active_.push_back(id);
        ++stats_.activated;
        system_.reset();
        back_simplify(id);
        generate_pairs();
        if (auto refuted = check_goals()) return std::move(*refuted);
      }
    } catch (const ResourceError& e) {
      return ResourceOut{e.what(), stats_};
    }

    std::vector<Equation> eqs;
    for (std::size_t id : active_) eqs.push_back(conclusion(id));
    RewriteSystem system(std::move(eqs), config_, RewriteMode::Ordered,
                         &problem_.signature);
    return Saturated{std::move(system), std::move(trace_), std::move(active_),
                     stats_};
  }

 private:
  const Equation& conclusion(std::size_t id) const {
    return trace_[id].conclusion;
  }

  std::size_t add_record(InferenceRecord rec) {
    if (trace_.size() >= limits_.max_equations)
      throw ResourceError("completion exceeded " +
                          std::to_string(limits_.max_equations) +
                          " equations");
    rec.id = trace_.size();
    trace_.push_back(std::move(rec));
    return trace_.back().id;
  }

  const RewriteSystem& active_system() {
    if (!system_) {
      std::vector<Equation> eqs;
      eqs.reserve(active_.size());
      for (std::size_t id : active_) eqs.push_back(conclusion(id));
      system_.emplace(std::move(eqs), config_, RewriteMode::Ordered,
                      &problem_.signature);
    }
    return *system_;
  }

  /// Selection: smallest-first with oldest-first every sixth step; ties go
  /// to the older equation.
  std::size_t select() {
    std::size_t best = 0;
    if (stats_.steps % 6 != 0) {
      for (std::size_t i = 1; i < passive_.size(); ++i) {
        std::size_t si = equation_size(conclusion(passive_[i]));
        std::size_t sb = equation_size(conclusion(passive_[best]));
        if (si < sb || (si == sb && passive_[i] < passive_[best])) best = i;
      }
    } else {
      for (std::size_t i = 1; i < passive_.size(); ++i)
        if (passive_[i] < passive_[best]) best = i;
    }
    std::size_t id = passive_[best];
    passive_.erase(passive_.begin() + static_cast<std::ptrdiff_t>(best));
    return id;
  }

  /// Rewrites the equation to normal form against the active set, lhs
  /// first, recording each step.
  std::size_t simplify_fully(std::size_t id) {
    for (;;) {
      const Equation& e = conclusion(id);
      const RewriteSystem& sys = active_system();
      bool on_lhs = true;
      auto step = open_rewrite_step(sys, e.lhs);
      if (!step) {
        on_lhs = false;
        step = open_rewrite_step(sys, e.rhs);
      }
      if (!step) return id;
      Equation next = on_lhs ? Equation{step->result, e.rhs}
                             : Equation{e.lhs, step->result};
      InferenceRecord rec{0,
                          InferenceKind::Simplify,
                          {id, active_[step->equation_index]},
                          rename_equation_canonical(next),
                          on_lhs,
                          step->position,
                          step->direction,
                          Direction::LeftToRight,
                          0};
      id = add_record(std::move(rec));
      ++stats_.simplify_steps;
    }
  }

  bool is_variant_of_active(const Equation& e) const {
    Equation c = canonical_equation(e);
    for (std::size_t id : active_) {
      Equation a = canonical_equation(conclusion(id));
      if (a == c) return true;
    }
    return false;
  }

  /// Re-simplifies active equations that the newly activated one reduces;
  /// they go back to passive.
  void back_simplify(std::size_t new_id) {
    RewriteSystem single({conclusion(new_id)}, config_, RewriteMode::Ordered,
                         &problem_.signature);
    for (std::size_t i = 0; i < active_.size();) {
      std::size_t id = active_[i];
      if (id == new_id) {
        ++i;
        continue;
      }
      const Equation& e = conclusion(id);
      if (!open_rewrite_step(single, e.lhs) &&
          !open_rewrite_step(single, e.rhs)) {
        ++i;
        continue;
      }
      active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(i));
      system_.reset();
      std::size_t sid = simplify_fully(id);
      const Equation& s = conclusion(sid);
      if (s.lhs == s.rhs || is_variant_of_active(s)) {
        ++stats_.deleted;
      } else {
        passive_.push_back(sid);
      }
    }
  }

  /// Queues the nontrivial ordered critical pairs involving the newest
  /// active equation.
  void generate_pairs() {
    const RewriteSystem& sys = active_system();
    std::size_t newest = active_.size() - 1;
    for (const CriticalPair& cp : critical_pairs(sys, newest)) {
      if (cp.trivial) continue;
      Equation e = rename_equation_canonical(Equation{cp.left, cp.right});
      if (e.lhs.node_count() > limits_.max_term_size ||
          e.rhs.node_count() > limits_.max_term_size) {
        ++stats_.discarded_oversize;
        continue;
      }
      InferenceRecord rec{0,
                          InferenceKind::CriticalPair,
                          {active_[cp.outer_index], active_[cp.inner_index]},
                          std::move(e),
                          true,
                          cp.position,
                          cp.outer_direction,
                          cp.inner_direction,
                          0};
      passive_.push_back(add_record(std::move(rec)));
      ++stats_.generated;
    }
  }

  /// Tests each goal: refuted when its sides join under the active set.
  std::optional<Refuted> check_goals() {
    if (problem_.disequations.empty()) return std::nullopt;
    Evaluator eval(active_system());
    for (std::size_t k = 0; k < problem_.disequations.size(); ++k) {
      const Equation& d = problem_.disequations[k];
      Term lnf = eval.normal_form(d.lhs);
      Term rnf = eval.normal_form(d.rhs);
      if (!(lnf == rnf)) continue;
      add_record(InferenceRecord{
          0, InferenceKind::Refutation, {}, d, true, Position{},
          Direction::LeftToRight, Direction::LeftToRight, k});
      return Refuted{std::move(trace_), active_, k,
                     std::move(lnf), std::move(rnf), stats_};
    }
    return std::nullopt;
  }

  const Problem& problem_;
  const OrderingConfig& config_;
  const CompletionLimits& limits_;

  std::vector<InferenceRecord> trace_;
  std::vector<std::size_t> active_;
  std::vector<std::size_t> passive_;
  std::optional<RewriteSystem> system_;
  CompletionStats stats_;
};

}  // namespace

CompletionOutcome complete(const Problem& problem,
                           const OrderingConfig& config,
                           const CompletionLimits& limits) {
  return Completion(problem, config, limits).run();
}

// ---------------------------------------------------------------------------
// Replay

namespace {

Term prime_vars_replay(const Term& t) {
  if (t.is_var()) return Term::var(t.head() + "'");
  if (t.ground()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(prime_vars_replay(a));
  return Term::app(t.head(), std::move(args));
}

std::string describe(const InferenceRecord& rec) {
  return "record " + std::to_string(rec.id) + " (" +
         inference_kind_str(rec.kind) + ")";
}

}  // namespace

std::optional<std::string> replay_refutation(const Problem& problem,
                                             const OrderingConfig& config,
                                             const Refuted& refutation) {
  const std::vector<InferenceRecord>& trace = refutation.trace;

  std::vector<Equation> axioms;
  axioms.reserve(problem.axioms.size());
  for (const Equation& ax : problem.axioms)
    axioms.push_back(rename_equation_canonical(ax));

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const InferenceRecord& rec = trace[i];
    if (rec.id != i) return describe(rec) + ": id does not match its index";
    for (std::size_t p : rec.parents)
      if (p >= i) return describe(rec) + ": parent " + std::to_string(p) +
                         " is not an earlier record";

    switch (rec.kind) {
      case InferenceKind::Input: {
        if (std::find(axioms.begin(), axioms.end(), rec.conclusion) ==
            axioms.end())
          return describe(rec) + ": conclusion is not an input axiom";
        break;
      }
      case InferenceKind::Simplify: {
        if (rec.parents.size() != 2)
          return describe(rec) + ": expected two parents";
        const Equation& target = trace[rec.parents[0]].conclusion;
        const Equation& by = trace[rec.parents[1]].conclusion;
        const Term& side = rec.on_lhs ? target.lhs : target.rhs;
        const Term& from =
            rec.direction == Direction::LeftToRight ? by.lhs : by.rhs;
        const Term& to =
            rec.direction == Direction::LeftToRight ? by.rhs : by.lhs;
        Term sub = side;
        try {
          sub = subterm_at(side, rec.position);
        } catch (const std::out_of_range&) {
          return describe(rec) + ": position is not in the target";
        }
        auto m = match_term(from, sub);
        if (!m) return describe(rec) + ": used equation does not match";
        for (const std::string& v : variables_of(to))
          if (!m->lookup(v))
            return describe(rec) + ": step would invent a binding";
        Term contractum = apply_subst(*m, to);
        if (compare(config, sub, contractum) != Cmp::Greater)
          return describe(rec) + ": step does not decrease";
        Term new_side = replace_at(side, rec.position, contractum);
        Equation expected = rec.on_lhs ? Equation{new_side, target.rhs}
                                       : Equation{target.lhs, new_side};
        if (!(rename_equation_canonical(expected) == rec.conclusion))
          return describe(rec) + ": conclusion differs from the recomputed "
                                 "equation";
        break;
      }
      case InferenceKind::CriticalPair: {
        if (rec.parents.size() != 2)
          return describe(rec) + ": expected two parents";
        const Equation& outer = trace[rec.parents[0]].conclusion;
        const Equation& inner = trace[rec.parents[1]].conclusion;
        const Term& ofrom =
            rec.direction == Direction::LeftToRight ? outer.lhs : outer.rhs;
        const Term& oto =
            rec.direction == Direction::LeftToRight ? outer.rhs : outer.lhs;
        Term ifrom = prime_vars_replay(
            rec.inner_direction == Direction::LeftToRight ? inner.lhs
                                                          : inner.rhs);
        Term ito = prime_vars_replay(
            rec.inner_direction == Direction::LeftToRight ? inner.rhs
                                                          : inner.lhs);
        Term sub = ofrom;
        try {
          sub = subterm_at(ofrom, rec.position);
        } catch (const std::out_of_range&) {
          return describe(rec) + ": overlap position is not in the outer lhs";
        }
        if (sub.is_var())
          return describe(rec) + ": overlap at a variable position";
        auto theta = unify(ifrom, sub);
        if (!theta) return describe(rec) + ": parents do not overlap there";
        Term peak = apply_subst(*theta, ofrom);
        Term right = apply_subst(*theta, oto);
        Term left = replace_at(peak, rec.position, apply_subst(*theta, ito));
        if (compare(config, peak, right) == Cmp::Less ||
            compare(config, apply_subst(*theta, ifrom),
                    apply_subst(*theta, ito)) == Cmp::Less)
          return describe(rec) + ": the ordering refutes this overlap";
        if (!(rename_equation_canonical(Equation{left, right}) ==
              rec.conclusion))
          return describe(rec) + ": conclusion differs from the recomputed "
                                 "critical pair";
        break;
      }
      case InferenceKind::Refutation: {
        if (rec.disequation_index >= problem.disequations.size())
          return describe(rec) + ": no such disequation";
        std::vector<Equation> eqs;
        for (std::size_t id : refutation.active_ids) {
          if (id >= trace.size())
            return describe(rec) + ": active id out of range";
          eqs.push_back(trace[id].conclusion);
        }
        RewriteSystem sys(std::move(eqs), config, RewriteMode::Ordered,
                          &problem.signature);
        Evaluator eval(sys);
        const Equation& goal = problem.disequations[rec.disequation_index];
        Term lnf = eval.normal_form(goal.lhs);
        Term rnf = eval.normal_form(goal.rhs);
        if (!(lnf == rnf))
          return describe(rec) + ": the goal's sides do not join under the "
                                 "recorded system";
        if (!(lnf == refutation.lhs_nf) || !(rnf == refutation.rhs_nf))
          return describe(rec) + ": recorded normal forms differ";
        break;
      }
    }
  }

  if (trace.empty() || trace.back().kind != InferenceKind::Refutation)
    return std::string("the trace does not end in a refutation");
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::variant<RewriteSystem, Refuted, ResourceOut> saturate_or_load(
    const Problem& problem, const std::optional<SaturationDump>& dump,
    const OrderingConfig& config, const CompletionLimits& limits) {
  if (dump) {
    Signature merged = problem.signature;
    merged.extend(dump->signature);
    RewriteMode mode = dump->all_oriented() && !dump->equations.empty()
                           ? RewriteMode::Oriented
                           : RewriteMode::Ordered;
    return RewriteSystem(dump->equations_only(), config, mode, &merged);
  }
  CompletionOutcome outcome = complete(problem, config, limits);
  if (auto* sat = std::get_if<Saturated>(&outcome))
    return std::move(sat->system);
  if (auto* ref = std::get_if<Refuted>(&outcome)) return std::move(*ref);
  return std::move(std::get<ResourceOut>(outcome));
}

}  // namespace ueq
