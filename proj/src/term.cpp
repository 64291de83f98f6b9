#include "ueq/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace ueq {

// ---------------------------------------------------------------------------
// Signature

const Symbol& Signature::add(const std::string& name, std::size_t arity) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    const Symbol& existing = symbols_[it->second];
    if (existing.arity != arity) {
      throw ConfigError("symbol '" + name + "' used with arity " +
                        std::to_string(arity) + " but declared with arity " +
                        std::to_string(existing.arity));
    }
    return existing;
  }
  index_.emplace(name, symbols_.size());
  symbols_.push_back(Symbol{name, arity});
  return symbols_.back();
}

const Symbol* Signature::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &symbols_[it->second];
}

void Signature::extend(const Signature& other) {
  for (const Symbol& s : other.symbols_) add(s.name, s.arity);
}

std::vector<Symbol> Signature::constants() const {
  std::vector<Symbol> out;
  for (const Symbol& s : symbols_)
    if (s.arity == 0) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  std::string head;
  std::vector<Term> args;
  std::size_t hash = 0;
  std::uint32_t nodes = 1;
  std::uint32_t ops = 0;
  bool var = false;
  bool ground = true;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  // boost::hash_combine flavor; good enough for structural hashing.
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->hash = mix(0x7661722e, std::hash<std::string>{}(name));  // "var."
  node->head = std::move(name);
  node->var = true;
  node->ground = false;
  return Term(std::move(node));
}

Term Term::app(std::string head, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  std::size_t h = mix(0x6170702e, std::hash<std::string>{}(head));  // "app."
  for (const Term& a : args) {
    h = mix(h, a.hash());
    node->nodes += a.node_count();
    node->ops += static_cast<std::uint32_t>(a.op_count());
    node->ground = node->ground && a.ground();
  }
  if (!args.empty()) node->ops += 1;
  node->hash = h;
  node->head = std::move(head);
  node->args = std::move(args);
  return Term(std::move(node));
}

bool Term::is_var() const { return node_->var; }
bool Term::is_app() const { return !node_->var; }
const std::string& Term::head() const { return node_->head; }
const std::vector<Term>& Term::args() const { return node_->args; }
std::size_t Term::node_count() const { return node_->nodes; }
std::size_t Term::op_count() const { return node_->ops; }
bool Term::ground() const { return node_->ground; }
std::size_t Term::hash() const { return node_->hash; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->var != other.node_->var ||
      node_->nodes != other.node_->nodes || node_->head != other.node_->head ||
      node_->args.size() != other.node_->args.size())
    return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i)
    if (!(node_->args[i] == other.node_->args[i])) return false;
  return true;
}

namespace {

void render(const Term& t, std::string& out, bool parenthesize) {
  if (t.is_var() || t.args().empty()) {
    out += t.head();
    return;
  }
  if (t.head() == "*" && t.args().size() == 2) {
    if (parenthesize) out += '(';
    render(t.args()[0], out, true);
    out += " * ";
    render(t.args()[1], out, true);
    if (parenthesize) out += ')';
    return;
  }
  out += t.head();
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    render(t.args()[i], out, false);
  }
  out += ')';
}

}  // namespace

std::string Term::str() const {
  std::string out;
  render(*this, out, false);
  return out;
}

// ---------------------------------------------------------------------------
// Positions

std::string position_str(const Position& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t idx : p) {
    if (cur->is_var() || idx >= cur->args().size())
      throw std::out_of_range("position " + position_str(p) +
                              " not valid in " + t.str());
    cur = &cur->args()[idx];
  }
  return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& replacement) {
  if (p.empty()) return replacement;
  if (t.is_var() || p.front() >= t.args().size())
    throw std::out_of_range("position " + position_str(p) + " not valid in " +
                            t.str());
  std::vector<Term> args = t.args();
  Position rest(p.begin() + 1, p.end());
  args[p.front()] = replace_at(args[p.front()], rest, replacement);
  return Term::app(t.head(), std::move(args));
}

namespace {

void collect_positions(const Term& t, Position& here,
                       std::vector<std::pair<Position, Term>>& out) {
  out.emplace_back(here, t);
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    here.push_back(i);
    collect_positions(t.args()[i], here, out);
    here.pop_back();
  }
}

}  // namespace

std::vector<std::pair<Position, Term>> subterm_positions(const Term& t) {
  std::vector<std::pair<Position, Term>> out;
  Position here;
  collect_positions(t, here, out);
  return out;
}

std::vector<std::string> variables_of(const Term& t) {
  std::vector<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.is_var()) {
      if (std::find(out.begin(), out.end(), u.head()) == out.end())
        out.push_back(u.head());
      return;
    }
    for (const Term& a : u.args()) walk(a);
  };
  walk(t);
  return out;
}

// ---------------------------------------------------------------------------
// Substitutions, matching, unification

bool Substitution::bind(const std::string& var, const Term& t) {
  auto it = bindings_.find(var);
  if (it != bindings_.end()) return it->second == t;
  bindings_.emplace(var, t);
  return true;
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

std::string Substitution::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += v + " -> " + t.str();
  }
  return out + "}";
}

Term apply_subst(const Substitution& s, const Term& t) {
  if (t.ground()) return t;
  if (t.is_var()) {
    const Term* bound = s.lookup(t.head());
    return bound ? *bound : t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply_subst(s, a));
  return Term::app(t.head(), std::move(args));
}

namespace {

bool match_into(const Term& pattern, const Term& subject, Substitution& s) {
  if (pattern.is_var()) return s.bind(pattern.head(), subject);
  if (subject.is_var() || pattern.head() != subject.head() ||
      pattern.args().size() != subject.args().size())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_into(pattern.args()[i], subject.args()[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match_term(const Term& pattern,
                                       const Term& subject) {
  Substitution s;
  if (match_into(pattern, subject, s)) return s;
  return std::nullopt;
}

namespace {

bool occurs(const std::string& var, const Term& t, const Substitution& s) {
  if (t.is_var()) {
    if (t.head() == var) return true;
    const Term* bound = s.lookup(t.head());
    return bound && occurs(var, *bound, s);
  }
  for (const Term& a : t.args())
    if (occurs(var, a, s)) return true;
  return false;
}

// Unification over a triangular substitution; solved form is produced at the
// end by repeated application.
bool unify_into(const Term& a, const Term& b, Substitution& s) {
  if (a.is_var()) {
    if (const Term* bound = s.lookup(a.head())) return unify_into(*bound, b, s);
    if (b.is_var() && b.head() == a.head()) return true;
    if (occurs(a.head(), b, s)) return false;
    return s.bind(a.head(), b);
  }
  if (b.is_var()) return unify_into(b, a, s);
  if (a.head() != b.head() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!unify_into(a.args()[i], b.args()[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> unify(const Term& s, const Term& t) {
  Substitution triangular;
  if (!unify_into(s, t, triangular)) return std::nullopt;
  // Resolve to idempotent form; terminates because the occurs check keeps
  // the dependency relation acyclic.
  Substitution solved;
  for (const auto& [v, bound] : triangular.bindings()) {
    Term resolved = bound;
    Term prev = resolved;
    do {
      prev = resolved;
      resolved = apply_subst(triangular, resolved);
    } while (!(resolved == prev));
    solved.bind(v, resolved);
  }
  return solved;
}

// ---------------------------------------------------------------------------
// Structural order, canonical forms

int compare_structural(const Term& a, const Term& b) {
  if (a == b) return 0;
  if (a.op_count() != b.op_count()) return a.op_count() < b.op_count() ? -1 : 1;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (a.head() != b.head()) return a.head() < b.head() ? -1 : 1;
  if (a.args().size() != b.args().size())
    return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (int c = compare_structural(a.args()[i], b.args()[i])) return c;
  return 0;
}

std::string canonical_var_name(std::size_t i) {
  static const char* base[] = {"x", "y", "z", "w", "u", "v"};
  if (i < 6) return base[i];
  return std::string(base[i % 6]) + std::to_string(i / 6);
}

namespace {

Term rename_with(const Term& t, std::map<std::string, std::string>& names) {
  if (t.is_var()) {
    auto it = names.find(t.head());
    if (it == names.end())
      it = names.emplace(t.head(), canonical_var_name(names.size())).first;
    return Term::var(it->second);
  }
  if (t.ground()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(rename_with(a, names));
  return Term::app(t.head(), std::move(args));
}

}  // namespace

Term rename_canonical(const Term& t) {
  std::map<std::string, std::string> names;
  return rename_with(t, names);
}

Equation rename_equation_canonical(const Equation& e) {
  std::map<std::string, std::string> names;
  Term lhs = rename_with(e.lhs, names);
  Term rhs = rename_with(e.rhs, names);
  return Equation{lhs, rhs};
}

Equation canonical_equation(const Equation& e) {
  // Canonicalize both orientations independently and keep the smaller pair.
  std::map<std::string, std::string> n1;
  Term a1 = rename_with(e.lhs, n1);
  Term b1 = rename_with(e.rhs, n1);
  std::map<std::string, std::string> n2;
  Term a2 = rename_with(e.rhs, n2);
  Term b2 = rename_with(e.lhs, n2);
  int c = compare_structural(a1, a2);
  if (c == 0) c = compare_structural(b1, b2);
  return c <= 0 ? Equation{a1, b1} : Equation{a2, b2};
}

std::vector<Term> ground_terms_up_to(const Signature& sig, std::size_t max_ops,
                                     std::size_t cap) {
  std::vector<Symbol> consts = sig.constants();
  if (consts.empty())
    throw ConfigError(
        "cannot enumerate ground terms: signature has no constants");

  // by_ops[k] = all ground terms with exactly k operation applications.
  std::vector<std::vector<Term>> by_ops(max_ops + 1);
  for (const Symbol& c : consts) by_ops[0].push_back(Term::constant(c.name));

  std::size_t total = by_ops[0].size();
  for (std::size_t k = 1; k <= max_ops; ++k) {
    for (const Symbol& f : sig.symbols()) {
      if (f.arity == 0) continue;
      // Distribute k-1 ops over the arguments in every way.
      std::vector<std::size_t> split(f.arity, 0);
      std::function<void(std::size_t, std::size_t)> go =
          [&](std::size_t arg, std::size_t remaining) {
            if (arg + 1 == f.arity) {
              split[arg] = remaining;
              std::vector<Term> chosen;
              std::function<void(std::size_t)> pick = [&](std::size_t i) {
                if (i == f.arity) {
                  by_ops[k].push_back(Term::app(f.name, chosen));
                  if (++total > cap)
                    throw ResourceError(
                        "ground term enumeration exceeds cap of " +
                        std::to_string(cap) + " terms");
                  return;
                }
                for (const Term& t : by_ops[split[i]]) {
                  chosen.push_back(t);
                  pick(i + 1);
                  chosen.pop_back();
                }
              };
              pick(0);
              return;
            }
            for (std::size_t take = 0; take <= remaining; ++take) {
              split[arg] = take;
              go(arg + 1, remaining - take);
            }
          };
      go(0, k - 1);
    }
  }

  std::vector<Term> out;
  out.reserve(total);
  for (auto& bucket : by_ops) {
    std::sort(bucket.begin(), bucket.end(), [](const Term& a, const Term& b) {
      return compare_structural(a, b) < 0;
    });
    for (Term& t : bucket) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace ueq
