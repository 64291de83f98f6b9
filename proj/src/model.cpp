#include "ueq/model.hpp"

#include <unordered_set>

#include "ueq/errors.hpp"

namespace ueq {

HerbrandModel::HerbrandModel(RewriteSystem system)
    : system_(std::move(system)), eval_(system_) {}

namespace {

void check_known(const Term& t, const Signature& sig) {
  if (t.is_var()) return;
  const Symbol* s = sig.find(t.head());
  if (!s)
    throw ConfigError("symbol '" + t.head() +
                      "' is not part of the model's signature");
  if (s->arity != t.args().size())
    throw ConfigError("symbol '" + t.head() + "' has arity " +
                      std::to_string(s->arity) + ", used with " +
                      std::to_string(t.args().size()) + " arguments");
  for (const Term& a : t.args()) check_known(a, sig);
}

}  // namespace

Term HerbrandModel::evaluate(const Term& t) {
  check_known(t, signature());
  return eval_.normal_form(t);
}

bool HerbrandModel::holds(const Term& lhs, const Term& rhs) {
  return evaluate(lhs) == evaluate(rhs);
}

std::string verdict_str(ModelVerdict v) {
  switch (v) {
    case ModelVerdict::VerifiedCountermodelAtBound:
      return "verified_countermodel_at_bound";
    case ModelVerdict::RefutedModel:
      return "refuted_model";
    case ModelVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

}  // namespace

ModelReport verify_countermodel(HerbrandModel& model, const Problem& problem,
                                const VerifyOptions& options) {
  const Signature& sig = model.signature();
  for (const Symbol& s : problem.signature.symbols()) {
    const Symbol* known = sig.find(s.name);
    if (!known || known->arity != s.arity)
      throw ConfigError("problem symbol '" + s.name +
                        "' is not part of the system's signature; build the "
                        "system with the problem's signature included");
  }

  ModelReport rep;
  rep.bound = options.bound;

  // Disequations: both sides must evaluate to different normal forms.
  for (std::size_t i = 0; i < problem.disequations.size(); ++i) {
    const Equation& d = problem.disequations[i];
    DisequationCheck check{d,
                           i < problem.disequation_names.size()
                               ? problem.disequation_names[i]
                               : "g" + std::to_string(i),
                           model.evaluate(d.lhs), model.evaluate(d.rhs), false};
    check.distinct = !(check.lhs_nf == check.rhs_nf);
    if (!check.distinct)
      rep.reasons.push_back("disequation " + check.name +
                            ": both sides normalize to " +
                            check.lhs_nf.str());
    rep.disequations.push_back(std::move(check));
  }

  // The domain up to the bound, collapsed to normal-form representatives.
  std::vector<Term> domain =
      ground_terms_up_to(sig, options.bound, options.domain_cap);
  rep.domain_size = domain.size();
  std::vector<Term> reps;
  {
    std::unordered_set<Term, TermHash> seen;
    for (const Term& g : domain) {
      Term nf = model.evaluate(g);
      if (seen.insert(nf).second) reps.push_back(std::move(nf));
    }
  }
  rep.representative_count = reps.size();

  // Axioms over every assignment of representatives to variables.
  for (std::size_t a = 0; a < problem.axioms.size(); ++a) {
    const Equation& ax = problem.axioms[a];
    AxiomCheck check{ax,
                     a < problem.axiom_names.size() ? problem.axiom_names[a]
                                                    : "a" + std::to_string(a),
                     0,
                     0,
                     0,
                     {}};
    std::vector<std::string> vars = variables_of(ax.lhs);
    for (const std::string& v : variables_of(ax.rhs))
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        vars.push_back(v);
    check.instances = saturating_pow(rep.domain_size, vars.size());

    std::vector<std::size_t> pick(vars.size(), 0);
    bool done = reps.empty() && !vars.empty();
    while (!done) {
      Substitution sigma;
      for (std::size_t i = 0; i < vars.size(); ++i)
        sigma.bind(vars[i], reps[pick[i]]);
      ++check.checked;
      Term lnf = model.evaluate(apply_subst(sigma, ax.lhs));
      Term rnf = model.evaluate(apply_subst(sigma, ax.rhs));
      if (!(lnf == rnf)) {
        ++check.failures;
        if (check.examples.size() < options.kept_failures)
          check.examples.push_back(
              AxiomFailure{std::move(sigma), std::move(lnf), std::move(rnf)});
      }
      // Odometer over representative indices.
      done = true;
      for (std::size_t i = vars.size(); i-- > 0;) {
        if (++pick[i] < reps.size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
    }
    if (check.failures > 0) {
      std::string msg = "axiom " + check.name + " fails for " +
                        std::to_string(check.failures) + " of " +
                        std::to_string(check.checked) +
                        " representative instances";
      if (!check.examples.empty())
        msg += ", e.g. " + check.examples.front().assignment.str() + " gives " +
               check.examples.front().lhs_nf.str() + " vs " +
               check.examples.front().rhs_nf.str();
      rep.reasons.push_back(std::move(msg));
    }
    rep.axioms.push_back(std::move(check));
  }

  rep.preorder = check_preordered(model.system());
  rep.confluence = check_ground_confluence(model.system());
  for (const std::string& r : rep.confluence.reasons) rep.reasons.push_back(r);
  rep.rejected_instantiations = model.rejected_instantiations();

  bool diseq_ok = true;
  for (const DisequationCheck& d : rep.disequations) diseq_ok &= d.distinct;
  bool axioms_ok = true;
  for (const AxiomCheck& a : rep.axioms) axioms_ok &= a.failures == 0;

  if (!diseq_ok) {
    // Joinable goal sides refute the countermodel claim with no further
    // assumptions: they are equal in the induced structure.
    rep.verdict = ModelVerdict::RefutedModel;
  } else if (!rep.confluence.certified) {
    rep.verdict = ModelVerdict::Inconclusive;
  } else if (!axioms_ok) {
    // With confluence certified the normal forms are the model's values, so
    // a failing instance genuinely falsifies the axiom in the model.
    rep.verdict = ModelVerdict::RefutedModel;
  } else {
    rep.verdict = ModelVerdict::VerifiedCountermodelAtBound;
  }
  return rep;
}

std::string ModelReport::summary() const {
  std::string out = "verdict: " + verdict_str(verdict) + " (bound " +
                    std::to_string(bound) + ")\n";
  out += "domain: " + std::to_string(domain_size) + " ground terms, " +
         std::to_string(representative_count) + " distinct values\n";
  for (const DisequationCheck& d : disequations) {
    out += "disequation " + d.name + ": " + d.lhs_nf.str() + " vs " +
           d.rhs_nf.str() + (d.distinct ? " -- distinct\n" : " -- EQUAL\n");
  }
  for (const AxiomCheck& a : axioms) {
    out += "axiom " + a.name + ": " + std::to_string(a.checked) +
           " representative instances covering " + std::to_string(a.instances);
    out += a.failures == 0
               ? ", all hold\n"
               : ", " + std::to_string(a.failures) + " FAIL\n";
  }
  out += "termination: ";
  out += confluence.termination_certified ? "certified" : "not certified";
  out += " (" + std::to_string(preorder.oriented_count) + "/" +
         std::to_string(preorder.comparisons.size()) +
         " equations oriented as written)\n";
  std::size_t nontrivial = 0, joined = 0;
  for (const CheckedPair& p : confluence.pairs) {
    if (p.pair.trivial) continue;
    ++nontrivial;
    if (p.joinable) ++joined;
  }
  out += "ground confluence: ";
  out += confluence.certified ? "certified" : "not certified";
  out += " (" + std::to_string(joined) + "/" + std::to_string(nontrivial) +
         " nontrivial critical pairs join)\n";
  for (const std::string& r : reasons) out += "note: " + r + "\n";
  return out;
}

}  // namespace ueq
