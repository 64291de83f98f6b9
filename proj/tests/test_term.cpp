#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "support/oracles.hpp"
#include "ueq/errors.hpp"
#include "ueq/term.hpp"
#include "ueq/tptp.hpp"

using namespace ueq;

namespace {

Term T(const std::string& text) { return parse_term_text(text); }

Signature star_sig() {
  Signature sig;
  sig.add("*", 2);
  sig.add("a", 0);
  return sig;
}

}  // namespace

TEST_SUITE("term") {

TEST_CASE("signature registers symbols in declaration order") {
  Signature sig;
  sig.add("f", 2);
  sig.add("a", 0);
  sig.add("f", 2);  // re-registration is a no-op
  sig.add("b", 0);
  REQUIRE(sig.size() == 3);
  CHECK(sig.symbols()[0].name == "f");
  CHECK(sig.symbols()[2].name == "b");
  CHECK(sig.find("a")->arity == 0);
  CHECK(sig.find("missing") == nullptr);
  std::vector<Symbol> consts = sig.constants();
  REQUIRE(consts.size() == 2);
  CHECK(consts[0].name == "a");
  CHECK(consts[1].name == "b");
  CHECK_THROWS_AS(sig.add("f", 1), ConfigError);
}

TEST_CASE("signature extend merges and checks arities") {
  Signature a, b;
  a.add("f", 1);
  b.add("g", 0);
  b.add("f", 1);
  a.extend(b);
  CHECK(a.size() == 2);
  Signature clash;
  clash.add("g", 2);
  CHECK_THROWS_AS(a.extend(clash), ConfigError);
}

TEST_CASE("term structure and cached measures") {
  Term x = Term::var("x");
  Term a = Term::constant("a");
  Term fxa = Term::app("f", {x, a});
  CHECK(x.is_var());
  CHECK(!x.is_app());
  CHECK(a.is_app());
  CHECK(fxa.head() == "f");
  CHECK(fxa.args().size() == 2);

  CHECK(x.node_count() == 1);
  CHECK(fxa.node_count() == 3);
  // Operation count ignores leaves: constants and variables are 0 ops.
  CHECK(x.op_count() == 0);
  CHECK(a.op_count() == 0);
  CHECK(fxa.op_count() == 1);
  CHECK(Term::app("f", {fxa, fxa}).op_count() == 3);

  CHECK(!fxa.ground());
  CHECK(Term::app("f", {a, a}).ground());

  CHECK(fxa == Term::app("f", {Term::var("x"), Term::constant("a")}));
  CHECK(fxa != Term::app("f", {a, x}));
  CHECK(fxa.hash() ==
        Term::app("f", {Term::var("x"), Term::constant("a")}).hash());
}

TEST_CASE("str renders * infix and everything else prefix") {
  CHECK(T("'*'('*'(a,b),c)").str() == "(a * b) * c");
  CHECK(T("'*'(a,'*'(b,c))").str() == "a * (b * c)");
  CHECK(T("f0(X, '*'(a, b))").str() == "f0(x, a * b)");
  CHECK(T("a").str() == "a");
  CHECK(T("X").str() == "x");
}

TEST_CASE("positions enumerate root first, depth first, left to right") {
  Term t = T("f(g(X), h(a, Y))");
  auto ps = subterm_positions(t);
  REQUIRE(ps.size() == t.node_count());
  CHECK(ps[0].first == Position{});
  CHECK(ps[1].first == Position{0});
  CHECK(ps[2].first == Position{0, 0});
  CHECK(ps[3].first == Position{1});
  CHECK(ps[4].first == Position{1, 0});
  CHECK(ps[5].first == Position{1, 1});
  for (const auto& [pos, sub] : ps) CHECK(subterm_at(t, pos) == sub);
  CHECK(position_str(Position{}) == "[]");
  CHECK(position_str(Position{0, 1}) == "[0,1]");
}

TEST_CASE("replace_at rebuilds the spine only") {
  Term t = T("f(g(a), b)");
  Term r = replace_at(t, {0, 0}, T("c"));
  CHECK(r == T("f(g(c), b)"));
  CHECK(replace_at(t, {}, T("c")) == T("c"));
  CHECK_THROWS_AS(subterm_at(t, {2}), std::out_of_range);
  CHECK_THROWS_AS(replace_at(t, {0, 0, 0}, T("c")), std::out_of_range);
}

TEST_CASE("variables_of lists first occurrences in order") {
  Term t = T("f(X, g(Y, X), Z)");
  CHECK(variables_of(t) == std::vector<std::string>{"x", "y", "z"});
  CHECK(variables_of(T("a")).empty());
}

TEST_CASE("substitution binding is conflict-checked") {
  Substitution s;
  CHECK(s.bind("x", T("a")));
  CHECK(s.bind("x", T("a")));       // same binding is fine
  CHECK(!s.bind("x", T("b")));      // conflicting binding is refused
  CHECK(*s.lookup("x") == T("a"));
  CHECK(s.lookup("y") == nullptr);
  CHECK(s.size() == 1);
  s.bind("y", T("f(a)"));
  CHECK(s.str() == "{x -> a, y -> f(a)}");
  CHECK(apply_subst(s, T("g(X, Y, Z)")) ==
        Term::app("g", {T("a"), T("f(a)"), Term::var("z")}));
}

TEST_CASE("match_term agrees with the naive matcher on random inputs") {
  Signature sig;
  sig.add("f", 2);
  sig.add("g", 1);
  sig.add("a", 0);
  sig.add("b", 0);
  oracles::TermGen patterns(1234, sig, {"x", "y"});
  oracles::TermGen subjects(5678, sig, {});
  for (int i = 0; i < 2000; ++i) {
    Term p = patterns.gen(3);
    Term s = subjects.gen(3);
    auto got = match_term(p, s);
    auto want = oracles::naive_match(p, s);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(apply_subst(*got, p) == s);
      CHECK(got->bindings() == *want);
    }
  }
}

TEST_CASE("match_term handles nonlinear patterns and rigid subject variables") {
  CHECK(match_term(T("f(X, X)"), T("f(a, a)")).has_value());
  CHECK(!match_term(T("f(X, X)"), T("f(a, b)")).has_value());
  // Subject variables are constants for matching purposes.
  CHECK(match_term(T("X"), T("Y")).has_value());
  CHECK(!match_term(T("a"), T("X")).has_value());
  CHECK(!match_term(T("f(X, a)"), T("f(a, Y)")).has_value());
}

TEST_CASE("unify produces idempotent most general unifiers") {
  // One equation parse keeps the two sides in a shared renaming scope, so
  // their variables are genuinely distinct: f(x, g(y)) vs f(g(z), w).
  Equation e = parse_equation_text("f(X, g(Y)) = f(g(Z), W)");
  auto u = unify(e.lhs, e.rhs);
  REQUIRE(u.has_value());
  Term l = apply_subst(*u, e.lhs);
  Term r = apply_subst(*u, e.rhs);
  CHECK(l == r);
  // Solved form: applying the unifier twice changes nothing.
  CHECK(apply_subst(*u, l) == l);

  CHECK(!unify(T("X"), T("f(X)")).has_value());       // occurs check
  CHECK(!unify(T("f(a)"), T("g(a)")).has_value());    // head clash
  CHECK(!unify(T("f(X, X)"), T("f(a, b)")).has_value());
  CHECK(unify(T("X"), T("Y")).has_value());
}

TEST_CASE("unify finds a unifier whenever one exists by construction") {
  Signature sig;
  sig.add("f", 2);
  sig.add("g", 1);
  sig.add("a", 0);
  oracles::TermGen shapes(42, sig, {"x", "y", "z"});
  oracles::TermGen fillers(43, sig, {"v"});
  std::mt19937_64 rng(44);
  for (int i = 0; i < 1000; ++i) {
    Term shape = shapes.gen(3);
    // Instantiate the shape two different ways; the instances must unify.
    Substitution s1, s2;
    for (const std::string& v : variables_of(shape)) {
      s1.bind(v, fillers.gen(2));
      if (rng() % 2 == 0) s2.bind(v, fillers.gen(2));
    }
    Term a = apply_subst(s1, shape);
    Term b = apply_subst(s2, rename_canonical(shape));
    // Rename apart: b's variables are canonical x,y,z..., a's may overlap,
    // so ground a's variables first.
    Substitution ground_all;
    for (const std::string& v : variables_of(a)) ground_all.bind(v, T("a"));
    a = apply_subst(ground_all, a);
    auto u = unify(a, b);
    if (u) {
      CHECK(apply_subst(*u, a) == apply_subst(*u, b));
    } else {
      // No unifier: then no substitution equates them; spot-check with the
      // all-to-'a' grounding.
      Substitution everything;
      for (const std::string& v : variables_of(b)) everything.bind(v, T("a"));
      CHECK(apply_subst(everything, a) != apply_subst(everything, b));
    }
  }
}

TEST_CASE("compare_structural is a strict total order on distinct terms") {
  std::vector<Term> univ = ground_terms_up_to(star_sig(), 3);
  for (const Term& s : univ)
    for (const Term& t : univ) {
      int st = compare_structural(s, t);
      int ts = compare_structural(t, s);
      CHECK(st == -ts);
      CHECK((st == 0) == (s == t));
    }
  // Transitivity over the enumerated universe.
  for (const Term& s : univ)
    for (const Term& t : univ)
      for (const Term& u : univ)
        if (compare_structural(s, t) < 0 && compare_structural(t, u) < 0)
          CHECK(compare_structural(s, u) < 0);
}

TEST_CASE("canonical variable names follow the fixed list") {
  CHECK(canonical_var_name(0) == "x");
  CHECK(canonical_var_name(1) == "y");
  CHECK(canonical_var_name(2) == "z");
  CHECK(canonical_var_name(3) == "w");
  CHECK(canonical_var_name(4) == "u");
  CHECK(canonical_var_name(5) == "v");
  CHECK(canonical_var_name(6) == "x1");
  CHECK(canonical_var_name(11) == "v1");
  CHECK(canonical_var_name(12) == "x2");
}

TEST_CASE("canonical renaming preserves structure and orientation") {
  // Built by hand: parse_term_text renames on its own, which would make
  // this vacuous.
  Term t = Term::app(
      "f", {Term::var("q"), Term::app("g", {Term::var("r"), Term::var("q")})});
  CHECK(rename_canonical(t).str() == "f(x, g(y, x))");

  Equation e{Term::app("g", {Term::var("b"), Term::var("a")}),
             Term::app("f", {Term::var("a")})};
  Equation r = rename_equation_canonical(e);
  CHECK(r.lhs.str() == "g(x, y)");
  CHECK(r.rhs.str() == "f(y)");
}

TEST_CASE("canonical_equation picks the structurally smaller orientation") {
  Equation e{T("f(X)"), T("X")};
  Equation c = canonical_equation(e);
  // The variable side is smaller, so it becomes the left-hand side.
  CHECK(c.lhs == Term::var("x"));
  CHECK(c.rhs == T("f(X)"));
  // Idempotence.
  CHECK(canonical_equation(c) == c);
  // Renamings and swaps of the same equation share a canonical form.
  Equation swapped{Term::var("q"), Term::app("f", {Term::var("q")})};
  CHECK(canonical_equation(swapped) == c);
}

TEST_CASE("ground term enumeration is ordered, complete and capped") {
  Signature sig = star_sig();          // one binary, one constant
  std::vector<Term> u0 = ground_terms_up_to(sig, 0);
  REQUIRE(u0.size() == 1);             // just a
  // Shapes per exact op count follow the Catalan numbers 1,1,2,5,14.
  CHECK(ground_terms_up_to(sig, 1).size() == 2);
  CHECK(ground_terms_up_to(sig, 2).size() == 4);
  CHECK(ground_terms_up_to(sig, 3).size() == 9);
  CHECK(ground_terms_up_to(sig, 4).size() == 23);

  std::vector<Term> univ = ground_terms_up_to(sig, 3);
  // Ordered by op count, then the structural order; no duplicates.
  for (std::size_t i = 1; i < univ.size(); ++i) {
    CHECK(univ[i - 1].op_count() <= univ[i].op_count());
    if (univ[i - 1].op_count() == univ[i].op_count())
      CHECK(compare_structural(univ[i - 1], univ[i]) < 0);
  }
  for (const Term& t : univ) CHECK(t.ground());

  // Two constants multiply the leaf choices.
  Signature two;
  two.add("*", 2);
  two.add("a", 0);
  two.add("b", 0);
  CHECK(ground_terms_up_to(two, 2).size() == 2 + 4 + 16);

  Signature none;
  none.add("f", 1);
  CHECK_THROWS_AS(ground_terms_up_to(none, 1), ConfigError);
  CHECK_THROWS_AS(ground_terms_up_to(two, 12, 1000), ResourceError);
}

}  // TEST_SUITE
