#include "ueq/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "ueq/errors.hpp"

namespace ueq {

Cmp flip(Cmp c) {
  switch (c) {
    case Cmp::Greater: return Cmp::Less;
    case Cmp::Less: return Cmp::Greater;
    default: return c;
  }
}

std::string cmp_str(Cmp c) {
  switch (c) {
    case Cmp::Greater: return "greater";
    case Cmp::Less: return "less";
    case Cmp::Equal: return "equal";
    case Cmp::Incomparable: return "incomparable";
  }
  return "?";
}

Precedence::Precedence(std::vector<std::string> descending)
    : order_(std::move(descending)) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (!rank_.emplace(order_[i], i).second)
      throw ConfigError("duplicate symbol '" + order_[i] + "' in precedence");
  }
}

bool Precedence::known(const std::string& symbol) const {
  return rank_.count(symbol) != 0;
}

std::size_t Precedence::rank(const std::string& symbol) const {
  auto it = rank_.find(symbol);
  if (it == rank_.end())
    throw ConfigError("symbol '" + symbol + "' not covered by the precedence");
  return it->second;
}

Cmp Precedence::compare(const std::string& f, const std::string& g) const {
  std::size_t rf = rank(f), rg = rank(g);
  if (rf == rg) return Cmp::Equal;
  return rf < rg ? Cmp::Greater : Cmp::Less;
}

std::string Precedence::str() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += " > ";
    out += order_[i];
  }
  return out;
}

std::uint64_t KboParams::weight(const std::string& symbol) const {
  auto it = weights.find(symbol);
  return it == weights.end() ? 1 : it->second;
}

void OrderingConfig::validate(const Signature& sig) const {
  for (const Symbol& s : sig.symbols()) {
    if (!precedence.known(s.name))
      throw ConfigError("symbol '" + s.name + "' missing from the precedence");
  }
  for (const std::string& name : precedence.descending()) {
    if (!sig.contains(name))
      throw ConfigError("precedence mentions '" + name +
                        "', which is not in the signature");
  }
  if (kind != Kind::Kbo) return;

  if (kbo.variable_weight < 1)
    throw ConfigError("KBO variable weight must be at least 1");
  std::string zero_unary;
  for (const Symbol& s : sig.symbols()) {
    std::uint64_t w = kbo.weight(s.name);
    if (s.arity == 0 && w < kbo.variable_weight)
      throw ConfigError("KBO weight of constant '" + s.name +
                        "' is below the variable weight");
    if (s.arity == 1 && w == 0) {
      if (!zero_unary.empty())
        throw ConfigError("KBO admits at most one unary symbol of weight 0 ('" +
                          zero_unary + "' and '" + s.name + "' both are)");
      zero_unary = s.name;
    }
  }
  if (!zero_unary.empty() && precedence.rank(zero_unary) != 0)
    throw ConfigError("unary symbol '" + zero_unary +
                      "' has weight 0 but is not the precedence maximum");
}

std::string OrderingConfig::str() const {
  std::string out = kind == Kind::Kbo ? "kbo(" : "lpo(";
  out += precedence.str();
  if (kind == Kind::Kbo) {
    out += "; w0=" + std::to_string(kbo.variable_weight);
    for (const auto& [name, w] : kbo.weights)
      out += "; w(" + name + ")=" + std::to_string(w);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// KBO

namespace {

void var_counts(const Term& t, std::map<std::string, std::int64_t>& counts,
                std::int64_t delta) {
  if (t.is_var()) {
    counts[t.head()] += delta;
    return;
  }
  for (const Term& a : t.args()) var_counts(a, counts, delta);
}

std::uint64_t kbo_weight(const KboParams& p, const Term& t) {
  if (t.is_var()) return p.variable_weight;
  std::uint64_t w = p.weight(t.head());
  for (const Term& a : t.args()) w += kbo_weight(p, a);
  return w;
}

bool kbo_gt(const OrderingConfig& cfg, const Term& s, const Term& t) {
  if (s == t || s.is_var()) return false;

  std::map<std::string, std::int64_t> counts;
  var_counts(s, counts, +1);
  var_counts(t, counts, -1);
  for (const auto& [v, c] : counts)
    if (c < 0) return false;

  std::uint64_t ws = kbo_weight(cfg.kbo, s), wt = kbo_weight(cfg.kbo, t);
  if (ws != wt) return ws > wt;

  if (t.is_var()) {
    // Equal weights force s to be a chain of weight-0 unaries; it is greater
    // exactly when the chain ends in t.
    const Term* cur = &s;
    while (cur->is_app() && cur->args().size() == 1) cur = &cur->args()[0];
    return *cur == t;
  }
  Cmp pc = cfg.precedence.compare(s.head(), t.head());
  if (pc != Cmp::Equal) return pc == Cmp::Greater;
  for (std::size_t i = 0; i < s.args().size(); ++i)
    if (!(s.args()[i] == t.args()[i]))
      return kbo_gt(cfg, s.args()[i], t.args()[i]);
  return false;
}

// ---------------------------------------------------------------------------
// LPO

bool lpo_gt(const OrderingConfig& cfg, const Term& s, const Term& t);

bool occurs_in(const Term& var, const Term& t) {
  if (t.is_var()) return t == var;
  for (const Term& a : t.args())
    if (occurs_in(var, a)) return true;
  return false;
}

bool lpo_gt(const OrderingConfig& cfg, const Term& s, const Term& t) {
  if (s == t || s.is_var()) return false;
  if (t.is_var()) return occurs_in(t, s);

  // Subterm case: some argument of s is >= t.
  for (const Term& si : s.args())
    if (si == t || lpo_gt(cfg, si, t)) return true;

  Cmp pc = cfg.precedence.compare(s.head(), t.head());
  if (pc == Cmp::Greater) {
    for (const Term& tj : t.args())
      if (!lpo_gt(cfg, s, tj)) return false;
    return true;
  }
  if (pc != Cmp::Equal) return false;

  // Same head: first differing argument decides, and s must dominate the
  // remaining arguments of t.
  for (std::size_t i = 0; i < s.args().size(); ++i) {
    if (s.args()[i] == t.args()[i]) continue;
    if (!lpo_gt(cfg, s.args()[i], t.args()[i])) return false;
    for (std::size_t j = i + 1; j < t.args().size(); ++j)
      if (!lpo_gt(cfg, s, t.args()[j])) return false;
    return true;
  }
  return false;
}

}  // namespace

Cmp compare(const OrderingConfig& cfg, const Term& s, const Term& t) {
  if (s == t) return Cmp::Equal;
  bool gt = cfg.kind == OrderingConfig::Kind::Kbo ? kbo_gt(cfg, s, t)
                                                  : lpo_gt(cfg, s, t);
  if (gt) return Cmp::Greater;
  bool lt = cfg.kind == OrderingConfig::Kind::Kbo ? kbo_gt(cfg, t, s)
                                                  : lpo_gt(cfg, t, s);
  return lt ? Cmp::Less : Cmp::Incomparable;
}

std::optional<Term> smallest_constant(const Signature& sig,
                                      const OrderingConfig& cfg) {
  std::optional<Term> best;
  for (const Symbol& c : sig.constants()) {
    Term t = Term::constant(c.name);
    if (!best || compare(cfg, t, *best) == Cmp::Less) best = t;
  }
  return best;
}

bool is_reduction_orientation(const OrderingConfig& cfg,
                              const std::vector<Equation>& rules) {
  for (const Equation& e : rules)
    if (compare(cfg, e.lhs, e.rhs) != Cmp::Greater) return false;
  return true;
}

namespace {

void collect_symbols(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) return;
  if (std::find(out.begin(), out.end(), t.head()) == out.end())
    out.push_back(t.head());
  for (const Term& a : t.args()) collect_symbols(a, out);
}

}  // namespace

OrientationSearch find_orientation(const std::vector<Equation>& rules,
                                   OrderingConfig::Kind kind,
                                   std::uint64_t budget) {
  std::vector<std::string> syms;
  for (const Equation& e : rules) {
    collect_symbols(e.lhs, syms);
    collect_symbols(e.rhs, syms);
  }

  OrientationSearch out;
  std::vector<std::size_t> idx(syms.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    if (out.candidates_tried >= budget) {
      out.budget_exhausted = true;
      return out;
    }
    ++out.candidates_tried;
    OrderingConfig cfg;
    cfg.kind = kind;
    std::vector<std::string> descending;
    descending.reserve(syms.size());
    for (std::size_t i : idx) descending.push_back(syms[i]);
    cfg.precedence = Precedence(std::move(descending));
    if (is_reduction_orientation(cfg, rules)) {
      out.config = std::move(cfg);
      return out;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

OrderingConfig default_ordering(const Signature& sig) {
  OrderingConfig cfg;
  cfg.kind = OrderingConfig::Kind::Kbo;
  std::vector<std::string> descending;
  for (auto it = sig.symbols().rbegin(); it != sig.symbols().rend(); ++it)
    descending.push_back(it->name);
  cfg.precedence = Precedence(std::move(descending));
  return cfg;
}

}  // namespace ueq
