#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ueq/term.hpp"

namespace ueq {

/// A unit equational problem: universally quantified equations plus ground
/// disequations (the negated conjecture). Clause variables are renamed to
/// canonical names at parse time; names run parallel to the clause vectors.
struct Problem {
  Signature signature;
  std::vector<Equation> axioms;
  std::vector<std::string> axiom_names;
  std::vector<Equation> disequations;
  std::vector<std::string> disequation_names;
};

/// One equation of a saturated-system dump; `oriented` records the l -> r
/// annotation emitted by the saturation process.
struct DumpEquation {
  Equation eq;
  bool oriented = false;
};

/// A parsed saturation dump. Disequations found in a dump are kept aside
/// (they are goals, not part of the rewrite system), and lines that are not
/// well-formed clauses (prover chatter) are skipped and counted.
struct SaturationDump {
  Signature signature;
  std::vector<DumpEquation> equations;
  std::vector<std::string> equation_names;
  std::vector<Equation> ignored_disequations;
  std::size_t skipped_lines = 0;

  bool all_oriented() const;
  std::vector<Equation> equations_only() const;
};

/// Parses a TPTP CNF problem in the unit equational subset: cnf(...) unit
/// clauses over = and !=, % comments, single-quoted atoms. Non-unit
/// clauses, predicate literals and non-ground disequations raise
/// FragmentError; anything else malformed raises ParseError.
Problem parse_problem(std::string_view text);

/// Parses a saturation dump: the same clause syntax, plus `lhs -> rhs` for
/// equations the prover has oriented, with unparseable lines skipped and
/// counted rather than rejected.
SaturationDump parse_saturation(std::string_view text);

/// Parses one term, e.g. a query from the command line. Uppercase names are
/// variables (renamed canonically); when `sig` is given, symbols are
/// registered in it with arity checking.
Term parse_term_text(std::string_view text, Signature* sig = nullptr);

/// Parses one equation `lhs = rhs` with the same term syntax; variables are
/// renamed canonically with orientation preserved.
Equation parse_equation_text(std::string_view text, Signature* sig = nullptr);

/// Renders a term in TPTP form: prefix applications, variables uppercased,
/// symbols quoted when they are not lower words.
std::string tptp_term(const Term& t);

std::string write_problem(const Problem& p);
std::string write_saturation(const SaturationDump& d);

/// Renders oriented rules in TRS format: a (VAR ...) block and a (RULES ...)
/// block, one rule per line. Symbols that are not plain identifiers are
/// aliased ('*' becomes m) and the alias table is recorded in a leading
/// (COMMENT ...) block.
std::string write_trs(const std::vector<Equation>& rules);

}  // namespace ueq
