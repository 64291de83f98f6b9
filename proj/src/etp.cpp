#include "ueq/etp.hpp"

#include <algorithm>
#include <functional>

#include "ueq/errors.hpp"

namespace ueq {

namespace {

/// All binary-tree shapes with exactly `ops` internal nodes. Leaves are a
/// placeholder variable; labeling happens afterwards.
std::vector<Term> shapes(std::size_t ops, const std::string& op) {
  if (ops == 0) return {Term::var("#")};
  std::vector<Term> out;
  for (std::size_t left = 0; left < ops; ++left) {
    for (const Term& l : shapes(left, op))
      for (const Term& r : shapes(ops - 1 - left, op))
        out.push_back(Term::app(op, {l, r}));
  }
  return out;
}

Term relabel(const Term& shape, const std::vector<std::size_t>& labels,
             std::size_t& next) {
  if (shape.is_var()) return Term::var(canonical_var_name(labels[next++]));
  std::vector<Term> args;
  args.reserve(shape.args().size());
  for (const Term& a : shape.args()) args.push_back(relabel(a, labels, next));
  return Term::app(shape.head(), std::move(args));
}

/// Calls `emit` for every restricted growth string of length n: the
/// canonical first-occurrence labelings, so no renaming is needed later.
void each_rgs(std::size_t n, std::vector<std::size_t>& prefix,
              std::size_t used, const std::function<void()>& emit) {
  if (prefix.size() == n) {
    emit();
    return;
  }
  for (std::size_t v = 0; v <= used; ++v) {
    prefix.push_back(v);
    each_rgs(n, prefix, std::max(used, v + 1), emit);
    prefix.pop_back();
  }
}

}  // namespace

bool is_canonical_magma(const Equation& e) {
  if (e.lhs == e.rhs && !e.lhs.is_var()) return false;
  return canonical_equation(e) == e;
}

std::vector<Equation> enumerate_magma_equations(std::size_t max_ops,
                                                const std::string& op) {
  std::vector<Equation> out;
  for (std::size_t total = 0; total <= max_ops; ++total) {
    for (std::size_t left_ops = 0; left_ops <= total; ++left_ops) {
      std::size_t right_ops = total - left_ops;
      for (const Term& ls : shapes(left_ops, op)) {
        for (const Term& rs : shapes(right_ops, op)) {
          std::size_t leaves = (left_ops + 1) + (right_ops + 1);
          std::vector<std::size_t> labels;
          each_rgs(leaves, labels, 0, [&] {
            std::size_t next = 0;
            Term lhs = relabel(ls, labels, next);
            Term rhs = relabel(rs, labels, next);
            Equation e{std::move(lhs), std::move(rhs)};
            if (is_canonical_magma(e)) out.push_back(std::move(e));
          });
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Equation& a, const Equation& b) {
    std::size_t oa = a.lhs.op_count() + a.rhs.op_count();
    std::size_t ob = b.lhs.op_count() + b.rhs.op_count();
    if (oa != ob) return oa < ob;
    if (int c = compare_structural(a.lhs, b.lhs)) return c < 0;
    return compare_structural(a.rhs, b.rhs) < 0;
  });
  return out;
}

std::uint64_t implication_count(std::uint64_t equation_count) {
  return equation_count * (equation_count - 1);
}

namespace {

Term with_op(const Term& t, const std::string& op) {
  if (t.is_var()) return t;
  if (t.args().size() != 2)
    throw ConfigError("magma terms are built from one binary operation; '" +
                      t.str() + "' is not");
  return Term::app(op, {with_op(t.args()[0], op), with_op(t.args()[1], op)});
}

Term ground_with_constants(const Term& t,
                           const std::map<std::string, Term>& constants) {
  if (t.is_var()) return constants.at(t.head());
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args())
    args.push_back(ground_with_constants(a, constants));
  return Term::app(t.head(), std::move(args));
}

}  // namespace

Problem implication_problem(const Equation& premise,
                            const Equation& conclusion,
                            const std::string& op) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};

  Equation prem{with_op(premise.lhs, op), with_op(premise.rhs, op)};
  Equation conc{with_op(conclusion.lhs, op), with_op(conclusion.rhs, op)};

  std::vector<std::string> vars = variables_of(conc.lhs);
  for (const std::string& v : variables_of(conc.rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      vars.push_back(v);
  if (vars.size() > 6)
    throw ConfigError("conclusions with more than 6 distinct variables are "
                      "not supported");

  Problem p;
  p.signature.add(op, 2);
  std::map<std::string, Term> constants;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    p.signature.add(names[i], 0);
    constants.emplace(vars[i], Term::constant(names[i]));
  }

  p.axioms.push_back(rename_equation_canonical(prem));
  p.axiom_names.push_back("premise");
  p.disequations.push_back(Equation{ground_with_constants(conc.lhs, constants),
                                    ground_with_constants(conc.rhs, constants)});
  p.disequation_names.push_back("goal");
  return p;
}

}  // namespace ueq
