#include "ueq/finite.hpp"

#include <algorithm>

#include "ueq/errors.hpp"

namespace ueq {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
constexpr std::size_t kHardCeiling = 6;

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

}  // namespace

std::size_t FiniteInterpretation::value(
    std::size_t symbol_index, const std::vector<std::size_t>& args) const {
  std::size_t idx = 0;
  for (std::size_t a : args) idx = idx * size + a;
  return tables[symbol_index][idx];
}

std::size_t FiniteInterpretation::evaluate(
    const Term& t,
    const std::map<std::string, std::size_t>& assignment) const {
  if (t.is_var()) return assignment.at(t.head());
  const Symbol* s = signature.find(t.head());
  if (!s) throw ConfigError("symbol '" + t.head() + "' is not interpreted");
  std::size_t idx = 0;
  for (const Term& a : t.args()) idx = idx * size + evaluate(a, assignment);
  return tables[static_cast<std::size_t>(s - signature.symbols().data())][idx];
}

std::string FiniteInterpretation::str() const {
  std::string out = "domain size " + std::to_string(size) + "\n";
  for (std::size_t i = 0; i < signature.size(); ++i) {
    const Symbol& s = signature.symbols()[i];
    if (s.arity == 0) {
      out += s.name + " = " + std::to_string(tables[i][0]) + "\n";
    } else if (s.arity == 2) {
      out += s.name + ":\n";
      for (std::size_t r = 0; r < size; ++r) {
        out += " ";
        for (std::size_t c = 0; c < size; ++c)
          out += " " + std::to_string(tables[i][r * size + c]);
        out += "\n";
      }
    } else {
      out += s.name + ": ";
      for (std::size_t v : tables[i]) out += " " + std::to_string(v);
      out += "\n";
    }
  }
  return out;
}

namespace {

/// One ground instance of an axiom or disequation, with variables already
/// assigned: evaluation returns nullopt while any needed cell is unset.
struct Instance {
  Term lhs;
  Term rhs;
  std::map<std::string, std::size_t> assignment;
  bool must_differ = false;  // disequation
};

class Search {
 public:
  Search(const Problem& problem, std::size_t size) : size_(size) {
    interp_.size = size;
    interp_.signature = problem.signature;
    for (const Symbol& s : interp_.signature.symbols())
      interp_.tables.push_back(
          std::vector<std::size_t>(power(size, s.arity), kUnset));

    for (const Equation& ax : problem.axioms) collect(ax, false);
    for (const Equation& d : problem.disequations) collect(d, true);
  }

  std::optional<FiniteInterpretation> run() {
    if (dfs(0, 0)) return interp_;
    return std::nullopt;
  }

 private:
  void collect(const Equation& e, bool must_differ) {
    std::vector<std::string> vars = variables_of(e.lhs);
    for (const std::string& v : variables_of(e.rhs))
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        vars.push_back(v);
    std::vector<std::size_t> pick(vars.size(), 0);
    for (;;) {
      Instance inst{e.lhs, e.rhs, {}, must_differ};
      for (std::size_t i = 0; i < vars.size(); ++i)
        inst.assignment.emplace(vars[i], pick[i]);
      instances_.push_back(std::move(inst));
      std::size_t i = vars.size();
      while (i-- > 0) {
        if (++pick[i] < size_) break;
        pick[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }

  std::optional<std::size_t> eval_partial(
      const Term& t, const std::map<std::string, std::size_t>& assignment) {
    if (t.is_var()) return assignment.at(t.head());
    const Symbol* s = interp_.signature.find(t.head());
    std::size_t idx = 0;
    for (const Term& a : t.args()) {
      auto v = eval_partial(a, assignment);
      if (!v) return std::nullopt;
      idx = idx * size_ + *v;
    }
    std::size_t si = static_cast<std::size_t>(
        s - interp_.signature.symbols().data());
    std::size_t cell = interp_.tables[si][idx];
    if (cell == kUnset) return std::nullopt;
    return cell;
  }

  bool consistent() {
    for (const Instance& inst : instances_) {
      auto l = eval_partial(inst.lhs, inst.assignment);
      if (!l) continue;
      auto r = eval_partial(inst.rhs, inst.assignment);
      if (!r) continue;
      if (inst.must_differ ? *l == *r : *l != *r) return false;
    }
    return true;
  }

  bool dfs(std::size_t symbol_index, std::size_t cell_index) {
    while (symbol_index < interp_.tables.size() &&
           cell_index >= interp_.tables[symbol_index].size()) {
      ++symbol_index;
      cell_index = 0;
    }
    if (symbol_index == interp_.tables.size()) return consistent();

    // Pin the first constant to 0: any model can be renamed to one where it
    // is, so nothing is lost and a factor of size! is saved.
    bool pinned = first_constant_ == kUnset &&
                  interp_.signature.symbols()[symbol_index].arity == 0;
    if (pinned) first_constant_ = symbol_index;

    std::size_t limit = pinned ? 1 : size_;
    for (std::size_t v = 0; v < limit; ++v) {
      interp_.tables[symbol_index][cell_index] = v;
      if (consistent() && dfs(symbol_index, cell_index + 1)) return true;
    }
    interp_.tables[symbol_index][cell_index] = kUnset;
    if (pinned) first_constant_ = kUnset;
    return false;
  }

  std::size_t size_;
  FiniteInterpretation interp_;
  std::vector<Instance> instances_;
  std::size_t first_constant_ = kUnset;
};

}  // namespace

std::optional<FiniteInterpretation> find_finite_model(const Problem& problem,
                                                      std::size_t size) {
  if (size == 0) throw ConfigError("the domain must not be empty");
  return Search(problem, size).run();
}

bool satisfies(const Problem& problem, const FiniteInterpretation& interp) {
  for (const std::vector<std::size_t>& table : interp.tables)
    for (std::size_t cell : table)
      if (cell >= interp.size) return false;

  auto all_instances_hold = [&](const Equation& e, bool must_differ) {
    std::vector<std::string> vars = variables_of(e.lhs);
    for (const std::string& v : variables_of(e.rhs))
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        vars.push_back(v);
    std::vector<std::size_t> pick(vars.size(), 0);
    for (;;) {
      std::map<std::string, std::size_t> assignment;
      for (std::size_t i = 0; i < vars.size(); ++i)
        assignment.emplace(vars[i], pick[i]);
      std::size_t l = interp.evaluate(e.lhs, assignment);
      std::size_t r = interp.evaluate(e.rhs, assignment);
      if (must_differ ? l == r : l != r) return false;
      std::size_t i = vars.size();
      while (i-- > 0) {
        if (++pick[i] < interp.size) break;
        pick[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    return true;
  };

  for (const Equation& ax : problem.axioms)
    if (!all_instances_hold(ax, false)) return false;
  for (const Equation& d : problem.disequations)
    if (!all_instances_hold(d, true)) return false;
  return true;
}

FiniteScan scan_finite_models(const Problem& problem, std::size_t max_size,
                              const FiniteOptions& options) {
  if (max_size == 0) throw ConfigError("the size bound must be at least 1");
  if (max_size > kHardCeiling)
    throw ConfigError("finite search is capped at size " +
                      std::to_string(kHardCeiling));
  if (max_size > options.ceiling)
    throw ConfigError("size bound " + std::to_string(max_size) +
                      " is above the ceiling of " +
                      std::to_string(options.ceiling) +
                      "; raise it explicitly to proceed");

  FiniteScan scan;
  scan.max_size = max_size;
  for (std::size_t n = 1; n <= max_size; ++n) {
    if (auto m = find_finite_model(problem, n)) {
      scan.witness = std::move(m);
      scan.witness_size = n;
      break;
    }
  }
  return scan;
}

}  // namespace ueq
