#include "ueq/rewrite.hpp"

#include <algorithm>

#include "ueq/errors.hpp"

namespace ueq {

std::string direction_str(Direction d) {
  return d == Direction::LeftToRight ? "l->r" : "r->l";
}

namespace {

void collect_signature(const Term& t, Signature& sig) {
  if (t.is_var()) return;
  sig.add(t.head(), t.args().size());
  for (const Term& a : t.args()) collect_signature(a, sig);
}

}  // namespace

RewriteSystem::RewriteSystem(std::vector<Equation> equations,
                             OrderingConfig config, RewriteMode mode,
                             const Signature* extra_signature)
    : config_(std::move(config)),
      mode_(mode),
      least_constant_(Term::constant("c0")) {
  equations_.reserve(equations.size());
  for (const Equation& e : equations)
    equations_.push_back(rename_equation_canonical(e));

  if (extra_signature) signature_.extend(*extra_signature);
  for (const Equation& e : equations_) {
    collect_signature(e.lhs, signature_);
    collect_signature(e.rhs, signature_);
  }

  if (signature_.constants().empty()) {
    // Invent a minimal constant so that ground terms exist and unbound
    // right-hand-side variables can be instantiated.
    std::string name = "c0";
    for (std::size_t n = 0; signature_.contains(name); ++n)
      name = "c" + std::to_string(n + 1);
    signature_.add(name, 0);
    fresh_constant_added_ = true;
    if (!config_.precedence.known(name)) {
      std::vector<std::string> descending = config_.precedence.descending();
      descending.push_back(name);
      config_.precedence = Precedence(std::move(descending));
    }
  }

  config_.validate(signature_);
  least_constant_ = *smallest_constant(signature_, config_);
}

// ---------------------------------------------------------------------------
// Ground rewriting

namespace {

/// A root step on a ground term: equations in input order, l->r before
/// r->l. Unbound right-hand-side variables are instantiated with the least
/// constant; in ordered mode the instance must strictly decrease.
std::optional<RewriteStep> ground_root_step(const RewriteSystem& sys,
                                            const Term& t,
                                            std::uint64_t* rejected) {
  for (std::size_t i = 0; i < sys.equations().size(); ++i) {
    const Equation& e = sys.equations()[i];
    for (Direction d : {Direction::LeftToRight, Direction::RightToLeft}) {
      if (d == Direction::RightToLeft && sys.mode() == RewriteMode::Oriented)
        break;
      const Term& from = d == Direction::LeftToRight ? e.lhs : e.rhs;
      const Term& to = d == Direction::LeftToRight ? e.rhs : e.lhs;
      auto m = match_term(from, t);
      if (!m) continue;
      Substitution sigma = *m;
      bool instantiated = false;
      for (const std::string& v : variables_of(to)) {
        if (!sigma.lookup(v)) {
          sigma.bind(v, sys.least_constant());
          instantiated = true;
        }
      }
      Term contractum = apply_subst(sigma, to);
      if (sys.mode() == RewriteMode::Ordered) {
        if (compare(sys.ordering(), t, contractum) != Cmp::Greater) {
          if (instantiated && rejected) ++*rejected;
          continue;
        }
      } else if (contractum == t) {
        continue;  // a no-op rule must not loop the strategy
      }
      return RewriteStep{Position{},     i,
                         d,              std::move(sigma),
                         t,              std::move(contractum)};
    }
  }
  return std::nullopt;
}

std::optional<RewriteStep> innermost_step(const RewriteSystem& sys,
                                          const Term& t,
                                          std::uint64_t* rejected) {
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (auto s = innermost_step(sys, t.args()[i], rejected)) {
      s->position.insert(s->position.begin(), i);
      return s;
    }
  }
  return ground_root_step(sys, t, rejected);
}

}  // namespace

std::optional<RewriteStep> rewrite_step(const RewriteSystem& system,
                                        const Term& t,
                                        std::uint64_t* rejected) {
  if (!t.ground())
    throw FragmentError("rewriting is defined on ground terms; '" + t.str() +
                        "' has variables");
  return innermost_step(system, t, rejected);
}

NormalizationTrace normalize(const RewriteSystem& system, const Term& t,
                             const NormalizeOptions& options) {
  if (!t.ground())
    throw FragmentError("rewriting is defined on ground terms; '" + t.str() +
                        "' has variables");
  NormalizationTrace trace;
  trace.terms.push_back(t);
  Term cur = t;
  while (auto s = innermost_step(system, cur, &trace.rejected_instantiations)) {
    if (trace.steps.size() >= options.step_cap)
      throw ResourceError("normalization exceeded the step cap of " +
                          std::to_string(options.step_cap));
    cur = replace_at(cur, s->position, s->contractum);
    trace.steps.push_back(std::move(*s));
    trace.terms.push_back(cur);
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Evaluator

Evaluator::Evaluator(const RewriteSystem& system, std::uint64_t step_cap)
    : system_(system), step_cap_(step_cap) {}

Term Evaluator::normal_form(const Term& t) {
  if (!t.ground())
    throw FragmentError("the model evaluates ground terms; '" + t.str() +
                        "' has variables");
  return eval(t);
}

bool Evaluator::equal(const Term& s, const Term& t) {
  return normal_form(s) == normal_form(t);
}

Term Evaluator::eval(const Term& t) {
  auto it = memo_.find(t);
  if (it != memo_.end()) return it->second;

  // Arguments first (the strategy is innermost), reusing memoized results.
  Term u = t;
  if (!t.args().empty()) {
    std::vector<Term> args;
    args.reserve(t.args().size());
    bool changed = false;
    for (const Term& a : t.args()) {
      Term na = eval(a);
      changed = changed || !(na == a);
      args.push_back(std::move(na));
    }
    if (changed) u = Term::app(t.head(), std::move(args));
  }

  // One root step, then normalize the contractum; by induction the result
  // is the strategy's normal form.
  if (auto step = ground_root_step(system_, u, &rejected_)) {
    if (++steps_ > step_cap_)
      throw ResourceError("evaluation exceeded the step cap of " +
                          std::to_string(step_cap_));
    u = eval(step->contractum);
  }
  memo_.emplace(t, u);
  memo_.emplace(u, u);
  return u;
}

// ---------------------------------------------------------------------------
// Pre-orderedness

PreorderReport check_preordered(const RewriteSystem& system) {
  PreorderReport rep;
  for (const Equation& e : system.equations()) {
    Cmp c = compare(system.ordering(), e.lhs, e.rhs);
    if (c == Cmp::Greater) ++rep.oriented_count;
    rep.comparisons.push_back(c);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Critical pairs

namespace {

Term prime_vars(const Term& t) {
  if (t.is_var()) return Term::var(t.head() + "'");
  if (t.ground()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(prime_vars(a));
  return Term::app(t.head(), std::move(args));
}

struct DirectedRule {
  std::size_t index;
  Direction direction;
  Term from;
  Term to;
};

/// The usable directions of each equation: as stored for oriented mode; for
/// ordered mode every direction not refuted on the open equation itself
/// (flipping an equation whose sides compare Greater can never fire).
std::vector<DirectedRule> usable_directions(const RewriteSystem& sys) {
  std::vector<DirectedRule> out;
  for (std::size_t i = 0; i < sys.equations().size(); ++i) {
    const Equation& e = sys.equations()[i];
    if (sys.mode() == RewriteMode::Oriented) {
      out.push_back({i, Direction::LeftToRight, e.lhs, e.rhs});
      continue;
    }
    Cmp c = compare(sys.ordering(), e.lhs, e.rhs);
    if (c == Cmp::Equal) continue;
    if (c != Cmp::Less)
      out.push_back({i, Direction::LeftToRight, e.lhs, e.rhs});
    if (c != Cmp::Greater)
      out.push_back({i, Direction::RightToLeft, e.rhs, e.lhs});
  }
  return out;
}

}  // namespace

std::vector<CriticalPair> critical_pairs(
    const RewriteSystem& system, std::optional<std::size_t> only_involving) {
  std::vector<DirectedRule> dirs = usable_directions(system);
  const bool ordered = system.mode() == RewriteMode::Ordered;
  std::vector<CriticalPair> out;

  for (const DirectedRule& outer : dirs) {    // rewrites the peak at the root
    for (const DirectedRule& inner : dirs) {  // rewrites inside, renamed apart
      if (only_involving && outer.index != *only_involving &&
          inner.index != *only_involving)
        continue;
      Term ifrom = prime_vars(inner.from);
      Term ito = prime_vars(inner.to);
      for (const auto& [pos, sub] : subterm_positions(outer.from)) {
        if (sub.is_var()) continue;
        // A rule's root overlap with its own renamed copy in the same
        // direction is always trivial; skip it.
        if (pos.empty() && inner.index == outer.index &&
            inner.direction == outer.direction)
          continue;
        auto theta = unify(ifrom, sub);
        if (!theta) continue;

        Term peak = apply_subst(*theta, outer.from);
        Term right = apply_subst(*theta, outer.to);
        Term left = replace_at(peak, pos, apply_subst(*theta, ito));
        if (ordered) {
          // Discard overlaps whose instance step is refuted for a parent.
          if (compare(system.ordering(), peak, right) == Cmp::Less) continue;
          if (compare(system.ordering(), apply_subst(*theta, ifrom),
                      apply_subst(*theta, ito)) == Cmp::Less)
            continue;
        }

        // Joint canonical renaming keeps shared variables shared.
        Term renamed = rename_canonical(Term::app("#", {peak, left, right}));
        CriticalPair cp{renamed.args()[0],
                        renamed.args()[1],
                        renamed.args()[2],
                        outer.index,
                        inner.index,
                        outer.direction,
                        inner.direction,
                        pos,
                        *theta,
                        false};
        cp.trivial = cp.left == cp.right;
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Open-term rewriting and confluence

std::optional<OpenStep> open_rewrite_step(const RewriteSystem& sys,
                                          const Term& t) {
  if (t.is_var()) return std::nullopt;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (auto r = open_rewrite_step(sys, t.args()[i])) {
      std::vector<Term> args = t.args();
      args[i] = std::move(r->result);
      r->result = Term::app(t.head(), std::move(args));
      r->position.insert(r->position.begin(), i);
      return r;
    }
  }
  for (std::size_t i = 0; i < sys.equations().size(); ++i) {
    const Equation& e = sys.equations()[i];
    for (Direction d : {Direction::LeftToRight, Direction::RightToLeft}) {
      if (d == Direction::RightToLeft && sys.mode() == RewriteMode::Oriented)
        break;
      const Term& from = d == Direction::LeftToRight ? e.lhs : e.rhs;
      const Term& to = d == Direction::LeftToRight ? e.rhs : e.lhs;
      auto m = match_term(from, t);
      if (!m) continue;
      bool bound = true;
      for (const std::string& v : variables_of(to))
        if (!m->lookup(v)) bound = false;
      if (!bound) continue;
      Term contractum = apply_subst(*m, to);
      if (sys.mode() == RewriteMode::Ordered) {
        if (compare(sys.ordering(), t, contractum) != Cmp::Greater) continue;
      } else if (contractum == t) {
        continue;
      }
      return OpenStep{std::move(contractum), Position{}, i, d};
    }
  }
  return std::nullopt;
}

Term normalize_open(const RewriteSystem& system, const Term& t,
                    const NormalizeOptions& options) {
  Term cur = t;
  for (std::uint64_t n = 0;; ++n) {
    if (n >= options.step_cap)
      throw ResourceError("normalization exceeded the step cap of " +
                          std::to_string(options.step_cap));
    auto next = open_rewrite_step(system, cur);
    if (!next) return cur;
    cur = std::move(next->result);
  }
}

ConfluenceReport check_ground_confluence(const RewriteSystem& system) {
  ConfluenceReport rep;
  PreorderReport pre = check_preordered(system);

  // Termination: every equation must be strictly orientable. In ordered
  // mode an equation whose sides compare Less is simply flipped.
  std::vector<Equation> directed;
  bool orientable = true;
  for (std::size_t i = 0; i < pre.comparisons.size(); ++i) {
    const Equation& e = system.equations()[i];
    switch (pre.comparisons[i]) {
      case Cmp::Greater:
        directed.push_back(e);
        break;
      case Cmp::Less:
        if (system.mode() == RewriteMode::Oriented) {
          orientable = false;
          rep.reasons.push_back("rule " + std::to_string(i) + " (" + e.str() +
                                ") is oriented against the ordering");
        } else {
          directed.push_back(Equation{e.rhs, e.lhs});
        }
        break;
      default:
        orientable = false;
        rep.reasons.push_back("equation " + std::to_string(i) + " (" +
                              e.str() +
                              ") is not orientable under the ordering");
        break;
    }
  }
  rep.termination_certified = orientable;

  // With termination certified, check joinability of the oriented system's
  // critical pairs; otherwise still enumerate pairs for the report, but
  // guard the joins, which are no longer guaranteed to terminate.
  const RewriteSystem* checked = &system;
  std::optional<RewriteSystem> directed_system;
  if (orientable) {
    directed_system.emplace(std::move(directed), system.ordering(),
                            RewriteMode::Oriented, &system.signature());
    checked = &*directed_system;
  }

  bool all_joinable = true;
  for (CriticalPair& cp : critical_pairs(*checked)) {
    Term left_nf = cp.left;
    Term right_nf = cp.right;
    bool joinable = true;
    if (!cp.trivial) {
      bool capped = false;
      try {
        left_nf = normalize_open(*checked, cp.left);
        right_nf = normalize_open(*checked, cp.right);
      } catch (const ResourceError&) {
        capped = true;
        rep.reasons.push_back("joining a critical pair of rules " +
                              std::to_string(cp.outer_index) + " and " +
                              std::to_string(cp.inner_index) +
                              " hit the step cap");
      }
      joinable = !capped && left_nf == right_nf;
      if (!joinable) {
        all_joinable = false;
        if (!capped)
          rep.reasons.push_back(
              "critical pair of rules " + std::to_string(cp.outer_index) +
              " and " + std::to_string(cp.inner_index) + " at " +
              position_str(cp.position) + " does not join: " + left_nf.str() +
              " vs " + right_nf.str());
      }
    }
    rep.pairs.push_back(CheckedPair{std::move(cp), joinable,
                                    std::move(left_nf), std::move(right_nf)});
  }

  rep.certified = orientable && all_joinable;
  return rep;
}

}  // namespace ueq
