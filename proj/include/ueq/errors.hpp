#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ueq {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line and column of the
/// offending token; what() includes both.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

/// Input outside the unit equational fragment: non-unit clauses, predicate
/// literals, non-ground disequations, non-ground query terms.
struct FragmentError : Error {
  using Error::Error;
};

/// Invalid configuration: unknown symbol in a precedence, inadmissible KBO
/// weights, arity clashes, out-of-range bounds.
struct ConfigError : Error {
  using Error::Error;
};

/// A resource limit was hit (rewrite step cap, completion limits, search
/// budgets).
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace ueq
