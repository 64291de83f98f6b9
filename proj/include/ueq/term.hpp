#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ueq/errors.hpp"

namespace ueq {

/// A function symbol with a fixed arity. Constants are symbols of arity 0.
struct Symbol {
  std::string name;
  std::size_t arity = 0;

  bool operator==(const Symbol& other) const {
    return name == other.name && arity == other.arity;
  }
};

/// An ordered set of function symbols. Declaration order is significant: it
/// drives the default ordering precedence and the enumeration order of
/// ground terms, so parsers and generators register symbols deterministically
/// (order of first occurrence).
class Signature {
 public:
  /// Registers a symbol, or returns the existing entry. Throws ConfigError
  /// if the name is already registered with a different arity.
  const Symbol& add(const std::string& name, std::size_t arity);

  /// Looks a symbol up by name; nullptr when absent.
  const Symbol* find(const std::string& name) const;

  bool contains(const std::string& name) const { return find(name) != nullptr; }

  /// Adds every symbol of `other`, checking arity agreement.
  void extend(const Signature& other);

  const std::vector<Symbol>& symbols() const { return symbols_; }

  /// The arity-0 symbols, in declaration order.
  std::vector<Symbol> constants() const;

  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }

  bool operator==(const Signature& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::map<std::string, std::size_t> index_;
};

/// An immutable first-order term: a variable or a function application.
/// Terms share structure through shared_ptr and cache their hash, node
/// count, operation count and groundness, so copies are cheap and equality
/// checks are fast. Variables and function symbols are plain strings;
/// variables are whatever the constructor was told, no global registry.
class Term {
 public:
  static Term var(std::string name);
  static Term app(std::string head, std::vector<Term> args = {});
  /// Convenience for constants.
  static Term constant(std::string name) { return app(std::move(name)); }

  bool is_var() const;
  bool is_app() const;
  /// Variable name or function symbol.
  const std::string& head() const;
  const std::vector<Term>& args() const;

  /// Total number of nodes (variables and applications).
  std::size_t node_count() const;
  /// Number of operation applications: application nodes of positive arity.
  /// Variables and constants have 0 ops, f(a, b) has 1.
  std::size_t op_count() const;
  bool ground() const;
  std::size_t hash() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  /// Compact rendering: variables bare, "*" infix with parentheses around
  /// nested products, every other symbol prefix. f0(x, a * b) style.
  std::string str() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// An unordered equation lhs ~ rhs. Orientation, when one exists, lives in
/// the rewrite layer; this is just the pair.
struct Equation {
  Term lhs;
  Term rhs;

  bool operator==(const Equation& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

/// A position is the path of argument indices from the root; {} is the root
/// itself, {0, 1} is the second argument of the first argument.
using Position = std::vector<std::size_t>;

std::string position_str(const Position& p);

/// Subterm at `p`. Throws std::out_of_range for an invalid position.
const Term& subterm_at(const Term& t, const Position& p);

/// Returns `t` with the subterm at `p` replaced by `replacement`.
Term replace_at(const Term& t, const Position& p, const Term& replacement);

/// All (position, subterm) pairs in leftmost-outermost order: the root
/// first, then each argument's positions depth-first left to right.
std::vector<std::pair<Position, Term>> subterm_positions(const Term& t);

/// Variable names in order of first occurrence, left to right.
std::vector<std::string> variables_of(const Term& t);

/// A finite map from variable names to terms.
class Substitution {
 public:
  /// Binds `var` to `t`. Returns false (and changes nothing) when `var` is
  /// already bound to a different term.
  bool bind(const std::string& var, const Term& t);
  const Term* lookup(const std::string& var) const;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<std::string, Term>& bindings() const { return bindings_; }

  bool operator==(const Substitution& other) const {
    return bindings_ == other.bindings_;
  }

  /// {x -> a, y -> f0(b)} style, keys sorted.
  std::string str() const;

 private:
  std::map<std::string, Term> bindings_;
};

/// Applies a substitution; unbound variables stay themselves.
Term apply_subst(const Substitution& s, const Term& t);

/// One-way matching: a substitution s with apply_subst(s, pattern) ==
/// subject, or nullopt. Subject variables are treated as rigid.
std::optional<Substitution> match_term(const Term& pattern, const Term& subject);

/// Most general unifier in fully solved (idempotent) form, or nullopt.
/// Includes the occurs check.
std::optional<Substitution> unify(const Term& s, const Term& t);

/// Fixed total order on terms used wherever a deterministic choice is
/// needed (canonical orientation, tie-breaking, sorted output). Compares by
/// operation count, then variables before applications, then head name,
/// then arguments lexicographically. Returns <0, 0, >0.
int compare_structural(const Term& a, const Term& b);

/// The canonical name of the i-th distinct variable: x y z w u v, then
/// x1 y1 z1 w1 u1 v1, x2 ...
std::string canonical_var_name(std::size_t i);

/// Renames variables to canonical names in order of first occurrence.
Term rename_canonical(const Term& t);

/// Renames both sides consistently (first occurrence, lhs before rhs),
/// preserving orientation.
Equation rename_equation_canonical(const Equation& e);

/// Canonical form of an unordered equation: variables renamed by first
/// occurrence (lhs first), and of the two orientations the one whose sides
/// are smaller under compare_structural (lhs then rhs) is kept.
Equation canonical_equation(const Equation& e);

/// All ground terms with at most `max_ops` application nodes above the
/// constant level, i.e. constants have 0 ops, f(c, d) has 1. Ordered by op
/// count, then compare_structural. Throws ConfigError when the signature
/// has no constants, ResourceError when the count would exceed `cap`.
std::vector<Term> ground_terms_up_to(const Signature& sig, std::size_t max_ops,
                                     std::size_t cap = 2'000'000);

}  // namespace ueq
