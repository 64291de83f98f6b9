#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ueq/tptp.hpp"

namespace ueq {

/// A finite algebra on the domain {0, ..., size-1}: one value table per
/// signature symbol, row-major over the argument tuple (a constant's table
/// is its single cell).
struct FiniteInterpretation {
  std::size_t size = 1;
  Signature signature;
  std::vector<std::vector<std::size_t>> tables;  // parallel to symbols()

  std::size_t value(std::size_t symbol_index,
                    const std::vector<std::size_t>& args) const;
  /// Value of a term under an assignment of domain elements to variables.
  std::size_t evaluate(const Term& t,
                       const std::map<std::string, std::size_t>& assignment)
      const;

  std::string str() const;
};

/// Exhaustive backtracking search for a model of exactly `size` elements.
/// Cells are filled in declaration order (a symbol's table row-major),
/// values tried ascending, and the first constant is pinned to 0 (any model
/// can be renamed so). After each assignment, every axiom and disequation
/// instance whose cells are all known is rechecked. Deterministic; returns
/// the first model in that order.
std::optional<FiniteInterpretation> find_finite_model(const Problem& problem,
                                                      std::size_t size);

/// Independent check that the interpretation satisfies every axiom instance
/// and separates every disequation, by full enumeration.
bool satisfies(const Problem& problem, const FiniteInterpretation& interp);

struct FiniteOptions {
  /// Sizes above the ceiling are refused (ConfigError); the CLI can raise
  /// it to the hard maximum of 6 with an explicit flag.
  std::size_t ceiling = 4;
};

struct FiniteScan {
  std::size_t max_size = 0;
  std::optional<FiniteInterpretation> witness;
  std::size_t witness_size = 0;  // 0 when no witness
};

/// Tries sizes 1..max_size in order, stopping at the first model.
FiniteScan scan_finite_models(const Problem& problem, std::size_t max_size,
                              const FiniteOptions& options = {});

}  // namespace ueq
