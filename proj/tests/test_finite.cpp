#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "ueq/errors.hpp"
#include "ueq/finite.hpp"
#include "ueq/tptp.hpp"

using namespace ueq;

TEST_SUITE("finite") {

TEST_CASE("tables evaluate row-major over the argument tuple") {
  FiniteInterpretation m;
  m.size = 2;
  m.signature.add("mul", 2);
  m.signature.add("a", 0);
  m.tables = {{0, 1, 1, 0}, {1}};  // xor and the constant 1

  CHECK(m.value(0, {0, 0}) == 0);
  CHECK(m.value(0, {0, 1}) == 1);
  CHECK(m.value(0, {1, 0}) == 1);
  CHECK(m.value(0, {1, 1}) == 0);
  CHECK(m.value(1, {}) == 1);

  Term t = parse_term_text("mul(mul(a, X), a)");
  CHECK(m.evaluate(t, {{"x", 0}}) == 0);  // (1 xor 0) xor 1
  CHECK(m.evaluate(t, {{"x", 1}}) == 1);  // (1 xor 1) xor 1

  std::string s = m.str();
  CHECK(s.find("mul") != std::string::npos);
  CHECK(s.find("a = 1") != std::string::npos);
}

TEST_CASE("associativity without commutativity has the left projection") {
  Problem p = parse_problem(fixtures::read("assoc_not_comm.p"));
  auto m = find_finite_model(p, 2);
  REQUIRE(m.has_value());
  CHECK(m->size == 2);
  CHECK(satisfies(p, *m));

  // First model in deterministic cell order: left projection with a = 0 and
  // b = 1. mul(x, y) = x is associative and separates mul(a,b) = 0 from
  // mul(b,a) = 1.
  REQUIRE(m->signature.symbols().size() == 3);
  CHECK(m->signature.symbols()[0].name == "mul");
  CHECK(m->tables[0] == std::vector<std::size_t>{0, 0, 1, 1});
  const Symbol& second = m->signature.symbols()[1];
  const Symbol& third = m->signature.symbols()[2];
  CHECK(second.name == "a");
  CHECK(third.name == "b");
  CHECK(m->tables[1] == std::vector<std::size_t>{0});  // pinned first constant
  CHECK(m->tables[2] == std::vector<std::size_t>{1});

  // No one-element witness: the disequation needs two values.
  CHECK(!find_finite_model(p, 1).has_value());

  FiniteScan scan = scan_finite_models(p, 3);
  CHECK(scan.max_size == 3);
  REQUIRE(scan.witness.has_value());
  CHECK(scan.witness_size == 2);
  CHECK(scan.witness->tables[0] == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("the countermodel problems have no small finite models") {
  Problem p118 = parse_problem(fixtures::read("p118_274.p"));
  FiniteScan s118 = scan_finite_models(p118, 3);
  CHECK(!s118.witness.has_value());
  CHECK(s118.witness_size == 0);

  Problem p477 = parse_problem(fixtures::read("p477_1426.p"));
  FiniteScan s477 = scan_finite_models(p477, 3);
  CHECK(!s477.witness.has_value());
}

TEST_CASE("search agrees with naive enumeration at tiny sizes") {
  // A grab bag of problems: satisfiable, unsatisfiable through the goal,
  // and unsatisfiable through the axiom sizes.
  std::vector<std::string> sources = {
      "cnf(ax, axiom, f(X, Y) = f(Y, X)).\n"
      "cnf(g, negated_conjecture, a != b).\n",

      "cnf(ax, axiom, mul(X, X) = X).\n",

      "cnf(ax, axiom, f(X) = a).\n"
      "cnf(g, negated_conjecture, f(a) != a).\n",

      "cnf(ax, axiom, mul(X, Y) = mul(Y, X)).\n"
      "cnf(g, negated_conjecture, mul(a, b) != mul(b, a)).\n",

      fixtures::read("assoc_not_comm.p"),
      fixtures::read("p118_274.p"),
      fixtures::read("eq3.p"),
  };

  for (const std::string& src : sources) {
    CAPTURE(src);
    Problem p = parse_problem(src);
    for (std::size_t n = 1; n <= 2; ++n) {
      auto naive = oracles::naive_finite_search(p, n);
      auto fast = find_finite_model(p, n);
      CHECK(naive.has_value() == fast.has_value());
      if (fast) {
        CHECK(satisfies(p, *fast));
        CHECK(oracles::naive_holds(*fast, p));
      }
      if (naive) CHECK(satisfies(p, *naive));
    }
  }
}

TEST_CASE("satisfies is a genuinely independent check") {
  Problem p = parse_problem(fixtures::read("assoc_not_comm.p"));
  auto m = find_finite_model(p, 2);
  REQUIRE(m.has_value());

  FiniteInterpretation broken = *m;
  broken.tables[0] = {0, 1, 1, 0};  // xor is commutative: goal collapses
  CHECK(!satisfies(p, broken));

  FiniteInterpretation nonassoc = *m;
  nonassoc.tables[0] = {0, 1, 1, 1};  // or is associative, still commutative
  CHECK(!satisfies(p, nonassoc));
}

TEST_CASE("sizes above the ceiling are refused") {
  Problem p = parse_problem("cnf(ax, axiom, mul(X, X) = X).");
  CHECK_THROWS_AS(scan_finite_models(p, 5), ConfigError);
  CHECK(scan_finite_models(p, 5, {.ceiling = 5}).witness.has_value());
  CHECK_THROWS_AS(scan_finite_models(p, 7, {.ceiling = 6}), ConfigError);
  CHECK_THROWS_AS(find_finite_model(p, 0), ConfigError);
}

TEST_CASE("a problem with no function symbols still scans") {
  // Only constants: the goal alone decides satisfiability.
  Problem p = parse_problem("cnf(g, negated_conjecture, a != b).");
  FiniteScan scan = scan_finite_models(p, 2);
  REQUIRE(scan.witness.has_value());
  CHECK(scan.witness_size == 2);
  CHECK(scan.witness->tables[0] == std::vector<std::size_t>{0});
  CHECK(scan.witness->tables[1] == std::vector<std::size_t>{1});
  CHECK(satisfies(p, *scan.witness));
}

}  // TEST_SUITE
