#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ueq/term.hpp"

namespace ueq {

/// Outcome of comparing two terms in an ordering that is only partial on
/// terms with variables.
enum class Cmp { Greater, Less, Equal, Incomparable };

Cmp flip(Cmp c);
std::string cmp_str(Cmp c);

/// A strict total precedence on function symbols, given as a descending
/// chain. Duplicates are rejected.
class Precedence {
 public:
  Precedence() = default;
  explicit Precedence(std::vector<std::string> descending);

  bool known(const std::string& symbol) const;
  /// Position in the descending chain; smaller rank means larger symbol.
  /// Throws ConfigError for unknown symbols.
  std::size_t rank(const std::string& symbol) const;
  Cmp compare(const std::string& f, const std::string& g) const;

  const std::vector<std::string>& descending() const { return order_; }
  bool empty() const { return order_.empty(); }

  /// "* > f0 > b > a"
  std::string str() const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::size_t> rank_;
};

/// Knuth-Bendix weights. Symbols absent from the map weigh 1.
struct KboParams {
  std::map<std::string, std::uint64_t> weights;
  std::uint64_t variable_weight = 1;

  std::uint64_t weight(const std::string& symbol) const;
};

/// A reduction ordering: KBO or LPO over a symbol precedence. Both are
/// simplification orderings, hence well founded and stable under
/// substitution and contexts, and total on ground terms when the precedence
/// covers the signature.
struct OrderingConfig {
  enum class Kind { Kbo, Lpo };

  Kind kind = Kind::Kbo;
  Precedence precedence;
  KboParams kbo;

  /// Rejects precedences that do not cover the signature exactly, and for
  /// KBO enforces admissibility: variable weight at least 1, every constant
  /// at least the variable weight, and at most one unary symbol of weight 0
  /// which must then be the precedence maximum.
  void validate(const Signature& sig) const;

  std::string str() const;
};

/// Compares s and t under cfg. Equal is syntactic equality only.
Cmp compare(const OrderingConfig& cfg, const Term& s, const Term& t);

/// The least constant of the signature under cfg, if any.
std::optional<Term> smallest_constant(const Signature& sig,
                                      const OrderingConfig& cfg);

/// True when compare(lhs, rhs) is Greater for every rule.
bool is_reduction_orientation(const OrderingConfig& cfg,
                              const std::vector<Equation>& rules);

struct OrientationSearch {
  std::optional<OrderingConfig> config;
  bool budget_exhausted = false;
  std::uint64_t candidates_tried = 0;
};

/// Searches for a precedence whose LPO (or KBO with default weights)
/// orients every rule left to right. Candidate symbols are taken in order
/// of first occurrence in the rules and permutations are tried in
/// lexicographic order of that list, so the outcome is deterministic; the
/// enumeration is exhaustive whenever the permutation count fits the
/// budget (it always does up to 8 symbols).
OrientationSearch find_orientation(const std::vector<Equation>& rules,
                                   OrderingConfig::Kind kind,
                                   std::uint64_t budget = 2'000'000);

/// The default ordering: KBO, all weights 1, precedence = reverse
/// declaration order of the signature (later symbols are larger).
OrderingConfig default_ordering(const Signature& sig);

}  // namespace ueq
