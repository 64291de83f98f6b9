#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "ueq/errors.hpp"
#include "ueq/etp.hpp"
#include "ueq/tptp.hpp"

using namespace ueq;

TEST_SUITE("etp") {

TEST_CASE("the standard enumeration has 4694 equations in frozen order") {
  std::vector<Equation> eqs = enumerate_magma_equations(4);
  REQUIRE(eqs.size() == 4694);

  // Count by total operations: 2 + 5 + 39 + 364 + 4284.
  std::map<std::size_t, std::size_t> by_ops;
  for (const Equation& e : eqs) ++by_ops[e.lhs.op_count() + e.rhs.op_count()];
  CHECK(by_ops == std::map<std::size_t, std::size_t>{
                      {0, 2}, {1, 5}, {2, 39}, {3, 364}, {4, 4284}});

  CHECK(eqs[0].str() == "x = x");
  CHECK(eqs[1].str() == "x = y");
  CHECK(eqs[2].str() == "x = x * x");
  CHECK(eqs[3].str() == "x = x * y");
  CHECK(eqs[4].str() == "x = y * x");
  CHECK(eqs[5].str() == "x = y * y");
  CHECK(eqs[6].str() == "x = y * z");
  CHECK(eqs[7].str() == "x = x * (x * x)");

  // Every entry is canonical, and there are no duplicates.
  std::set<std::string> seen;
  for (const Equation& e : eqs) {
    CHECK(is_canonical_magma(e));
    CHECK(seen.insert(e.str()).second);
  }

  // The list is sorted by operation count, and smaller bounds are prefixes.
  for (std::size_t i = 1; i < eqs.size(); ++i) {
    std::size_t prev = eqs[i - 1].lhs.op_count() + eqs[i - 1].rhs.op_count();
    std::size_t cur = eqs[i].lhs.op_count() + eqs[i].rhs.op_count();
    CHECK(prev <= cur);
  }
  std::vector<Equation> two = enumerate_magma_equations(2);
  REQUIRE(two.size() == 46);
  for (std::size_t i = 0; i < two.size(); ++i) CHECK(two[i] == eqs[i]);
  CHECK(enumerate_magma_equations(0).size() == 2);
}

TEST_CASE("known equations sit at known indices") {
  std::vector<Equation> eqs = enumerate_magma_equations(4);
  CHECK(eqs[117].str() == "x = y * ((x * y) * y)");    // equation 118
  CHECK(eqs[273].str() == "x = ((y * x) * y) * y");    // equation 274
  CHECK(eqs[1425].str() == "x = (x * x) * (x * (x * x))");
  CHECK(eqs[684].str() == "x = y * (x * (y * (y * y)))");
  CHECK(eqs[117] == parse_equation_text("X = '*'(Y, '*'('*'(X, Y), Y))"));
}

TEST_CASE("reflexive equations other than x = x are excluded") {
  std::vector<Equation> eqs = enumerate_magma_equations(4);
  std::size_t reflexive = 0;
  for (const Equation& e : eqs)
    if (e.lhs == e.rhs) ++reflexive;
  CHECK(reflexive == 1);
  CHECK(eqs[0].lhs == eqs[0].rhs);

  Term x = Term::var("x");
  Term xx = Term::app("*", {x, x});
  CHECK(is_canonical_magma(Equation{x, x}));
  CHECK(!is_canonical_magma(Equation{xx, xx}));
  // Not canonical: the larger side is on the left.
  CHECK(!is_canonical_magma(Equation{xx, x}));
  // Not canonical: variables are not named by first occurrence.
  CHECK(!is_canonical_magma(Equation{Term::var("y"), Term::var("x")}));
}

TEST_CASE("implication-pair arithmetic") {
  CHECK(implication_count(4694) == 22028942);
  CHECK(implication_count(1) == 0);
  CHECK(implication_count(2) == 2);
  CHECK(implication_count(3) == 6);
}

TEST_CASE("implication problems reproduce the fixture clause sets") {
  std::vector<Equation> eqs = enumerate_magma_equations(4);

  Problem gen118 = implication_problem(eqs[117], eqs[273]);
  Problem fix118 = parse_problem(fixtures::read("p118_274.p"));
  CHECK(gen118.axioms == fix118.axioms);
  CHECK(gen118.disequations == fix118.disequations);
  CHECK(gen118.axiom_names == std::vector<std::string>{"premise"});
  CHECK(gen118.disequation_names == std::vector<std::string>{"goal"});

  Problem gen477 = implication_problem(eqs[684], eqs[1425]);
  Problem fix477 = parse_problem(fixtures::read("p477_1426.p"));
  CHECK(gen477.axioms == fix477.axioms);
  CHECK(gen477.disequations == fix477.disequations);

  // The emitted text parses back to the same problem.
  Problem reparsed = parse_problem(write_problem(gen118));
  CHECK(reparsed.axioms == gen118.axioms);
  CHECK(reparsed.disequations == gen118.disequations);
}

TEST_CASE("grounding uses fresh constants by first occurrence") {
  std::vector<Equation> eqs = enumerate_magma_equations(4);

  // Conclusion x = y * z grounds to a != b * c.
  Problem p = implication_problem(eqs[117], eqs[6]);
  REQUIRE(p.disequations.size() == 1);
  CHECK(p.disequations[0].lhs == Term::constant("a"));
  CHECK(p.disequations[0].rhs ==
        Term::app("*", {Term::constant("b"), Term::constant("c")}));
  CHECK(p.signature.contains("c"));

  // A reflexive conclusion grounds to the unsatisfiable a != a.
  Problem refl = implication_problem(eqs[1], eqs[0]);
  REQUIRE(refl.disequations.size() == 1);
  CHECK(refl.disequations[0] ==
        Equation{Term::constant("a"), Term::constant("a")});
}

TEST_CASE("implication problems validate their inputs") {
  std::vector<Equation> eqs = enumerate_magma_equations(1);

  // Seven distinct conclusion variables exceed the constant pool.
  Term chain = Term::var("q6");
  for (int i = 5; i >= 0; --i)
    chain = Term::app("*", {Term::var("q" + std::to_string(i)), chain});
  CHECK_THROWS_AS(implication_problem(eqs[1], Equation{Term::var("q0"), chain}),
                  ConfigError);

  // Premises must be magma terms over one binary operation.
  Equation unary{Term::app("g", {Term::var("x")}), Term::var("x")};
  CHECK_THROWS_AS(implication_problem(unary, eqs[0]), ConfigError);
}

TEST_CASE("a custom operation symbol is honored throughout") {
  std::vector<Equation> eqs = enumerate_magma_equations(1, "mul");
  REQUIRE(eqs.size() == 7);
  CHECK(eqs[2].str() == "x = mul(x, x)");

  Problem p = implication_problem(eqs[2], eqs[2], "mul");
  CHECK(p.signature.contains("mul"));
  CHECK(p.axioms[0] == parse_equation_text("X = mul(X, X)"));
  CHECK(p.disequations[0].rhs ==
        Term::app("mul", {Term::constant("a"), Term::constant("a")}));
}

}  // TEST_SUITE
