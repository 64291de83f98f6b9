#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ueq/term.hpp"
#include "ueq/tptp.hpp"

namespace ueq {

/// Magma equations: terms over one binary operation and variables.
/// The canonical form renames variables by first occurrence (lhs before
/// rhs) and puts the structurally smaller side on the left; syntactically
/// reflexive equations other than x = x are excluded from enumeration,
/// since they are consequences of x = x.

/// All canonical magma equations whose sides have at most `max_ops`
/// operations in total, sorted by total operation count and then by the
/// structural order. max_ops = 4 yields the standard list of 4694.
std::vector<Equation> enumerate_magma_equations(std::size_t max_ops = 4,
                                                const std::string& op = "*");

/// Whether `e` is its own canonical form (including the reflexivity rule).
bool is_canonical_magma(const Equation& e);

/// Number of ordered implication problems between distinct equations.
std::uint64_t implication_count(std::uint64_t equation_count);

/// The problem "premise implies conclusion", negated for refutation: the
/// premise is the axiom and the conclusion is grounded by fresh constants
/// (a, b, c, d, e, f by first occurrence) and asserted as a disequation.
/// Both equations are rebuilt over the binary symbol `op`.
Problem implication_problem(const Equation& premise,
                            const Equation& conclusion,
                            const std::string& op = "*");

}  // namespace ueq
