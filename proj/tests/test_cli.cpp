// End-to-end checks for the ueq binary: every exit code in the table, the
// exact text of the normalize trace, and JSON output plumbing. Each case
// shells out to the real executable (UEQ_CLI_PATH comes from the build).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

#include "ueq/tptp.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr merged
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ueq_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// `extra` is prepended to the command line, for environment assignments.
RunResult run(const std::string& args, const std::string& extra = "") {
  static int counter = 0;
  fs::path capture = scratch_dir() / ("run" + std::to_string(counter++));
  std::string cmd = extra + std::string(UEQ_CLI_PATH) + " " + args + " > " +
                    capture.string() + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(capture);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(UEQ_FIXTURES_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("normalize prints the worked-example trace verbatim") {
  RunResult r = run("normalize --term \"f(f(b,a),a)\" --eq \"f(X,Y)=f(Y,X)\""
                    " --lpo \"f>b>a\"");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "f(f(b, a), a)\n"
        "  => f(f(a, b), a)   (eq 0 l->r at [0])\n"
        "  => f(a, f(a, b))   (eq 0 l->r at [])\n"
        "normal form: f(a, f(a, b))\n");
}

TEST_CASE("normalize --json carries the trace and the resolved ordering") {
  RunResult r = run("normalize --term \"f(f(b,a),a)\" --eq \"f(X,Y)=f(Y,X)\""
                    " --lpo \"f>b>a\" --json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["input"] == "f(f(b, a), a)");
  CHECK(j["result"] == "f(a, f(a, b))");
  CHECK(j["terms"].size() == 3);
  CHECK(j["steps"].size() == 2);
  CHECK(j["steps"][0]["position"] == "[0]");
  CHECK(j["steps"][1]["direction"] == "l->r");
  CHECK(j["rejected_instantiations"] == 0);
  CHECK(j["ordering"]["kind"] == "lpo");
  CHECK(j["ordering"]["precedence"] == "f > b > a");
}

TEST_CASE("normalize --output writes the report to a file, not stdout") {
  std::string out_path = (scratch_dir() / "trace.txt").string();
  RunResult r = run("normalize --term \"f(f(b,a),a)\" --eq \"f(X,Y)=f(Y,X)\""
                    " --lpo \"f>b>a\" --output " + out_path);
  CHECK(r.code == 0);
  CHECK(r.output.empty());
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(contains(buf.str(), "normal form: f(a, f(a, b))"));
}

TEST_CASE("ordering config file is honoured, via flag and via UEQ_ORDERING") {
  std::string cfg = write_temp("lpo.json",
                               "{\"kind\": \"lpo\", \"precedence\": \"f>b>a\"}");
  std::string args = "normalize --term \"f(b,a)\" --eq \"f(X,Y)=f(Y,X)\"";

  RunResult flag = run(args + " --ordering-config " + cfg);
  CHECK(flag.code == 0);
  CHECK(contains(flag.output, "normal form: f(a, b)"));

  RunResult env = run(args, "UEQ_ORDERING=" + cfg + " ");
  CHECK(env.code == 0);
  CHECK(contains(env.output, "normal form: f(a, b)"));

  // Default KBO leaves the commutativity instance incomparable: no step.
  RunResult plain = run(args);
  CHECK(plain.code == 0);
  CHECK(contains(plain.output, "normal form: f(b, a)"));
}

TEST_CASE("check-model verifies the one-rule countermodel end to end") {
  RunResult r = run("check-model --problem " + fixture("p477_1426.p") +
                    " --dump " + fixture("sat477.s"));
  CHECK(r.code == 0);
  CHECK(contains(r.output, "verdict: verified_countermodel_at_bound (bound 2)"));
  CHECK(!contains(r.output, "note: skipped"));
}

TEST_CASE("check-model --json reports the frozen statistics") {
  RunResult r = run("check-model --problem " + fixture("p477_1426.p") +
                    " --dump " + fixture("sat477.s") + " --json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["verdict"] == "verified_countermodel_at_bound");
  CHECK(j["bound"] == 2);
  CHECK(j["domain_size"] == 4);
  CHECK(j["representative_count"] == 4);
  CHECK(j["skipped_dump_lines"] == 0);
  CHECK(j["confluence"]["certified"] == true);
  CHECK(j["reasons"].empty());
}

TEST_CASE("check-model exits 3 when a disequation collapses") {
  std::string dump = write_temp("collapse.s", "cnf(r1, axiom, f(X) -> a).\n");
  std::string prob = write_temp("collapse.p",
                                "cnf(g, negated_conjecture, f(a) != a).\n");
  RunResult r = run("check-model --problem " + prob + " --dump " + dump);
  CHECK(r.code == 3);
  CHECK(contains(r.output, "verdict: refuted_model"));
  CHECK(contains(r.output, "disequation g: both sides normalize to a"));
}

TEST_CASE("check-model exits 4 when confluence cannot be certified") {
  std::string dump = write_temp("incomparable.s",
                                "cnf(e1, axiom, f(X, Y) = f(Y, X)).\n"
                                "cnf(e2, axiom, g(a) = a).\n"
                                "cnf(e3, axiom, g(b) = b).\n");
  std::string prob = write_temp("incomparable.p",
                                "cnf(g1, negated_conjecture, a != b).\n");
  RunResult r = run("check-model --problem " + prob + " --dump " + dump);
  CHECK(r.code == 4);
  CHECK(contains(r.output, "verdict: inconclusive"));
}

TEST_CASE("saturate refutes the variable-collapse implication, exit 7") {
  RunResult r = run("saturate --problem " + fixture("eq3.p"));
  CHECK(r.code == 7);
  CHECK(contains(r.output,
                 "refuted disequation 0: mul(a, b) != mul(b, a)"));
  CHECK(contains(r.output, "joined at: mul(a, a)"));
  CHECK(contains(r.output, "replay: verified"));
}

TEST_CASE("saturate --json exposes the outcome and the replay verdict") {
  RunResult r = run("saturate --problem " + fixture("eq3.p") + " --json");
  CHECK(r.code == 7);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["outcome"] == "refuted");
  CHECK(j["disequation_index"] == 0);
  CHECK(j["replay_ok"] == true);
  CHECK(j["lhs_nf"] == "mul(a, a)");
}

TEST_CASE("saturate reports saturation for commutativity alone") {
  RunResult r = run("saturate --problem " + fixture("comm.p"));
  CHECK(r.code == 0);
  CHECK(contains(r.output,
                 "% saturated: 1 equation(s), 1 step(s), 0 generated"));
  CHECK(contains(r.output, "f(X, Y) = f(Y, X)"));
}

TEST_CASE("saturate exits 5 once the step budget is gone") {
  RunResult r = run("saturate --problem " + fixture("eq3.p") +
                    " --max-steps 0");
  CHECK(r.code == 5);
  CHECK(contains(r.output, "resource limit: completion exceeded 0 steps"));
}

TEST_CASE("export-trs writes an aliased TRS for the saturated dump") {
  RunResult r = run("export-trs --dump " + fixture("sat477.s"));
  CHECK(r.code == 0);
  CHECK(contains(r.output, "aliased m = *"));
  CHECK(contains(r.output, "(VAR x y)"));
  CHECK(contains(r.output, "m(x, m(y, m(x, m(x, x)))) -> y"));
}

TEST_CASE("export-trs exits 1 on an unorientable equation") {
  RunResult r = run("export-trs --problem " + fixture("comm.p"));
  CHECK(r.code == 1);
  CHECK(contains(r.output, "not orientable: equation 0"));
}

TEST_CASE("export-trs --auto-orient exits 1 when no precedence works") {
  // Orientability is the property this export certifies, so a failed
  // search is the expected outcome 1, not a config error.
  RunResult r = run("export-trs --problem " + fixture("comm.p") +
                    " --auto-orient");
  CHECK(r.code == 1);
  CHECK(contains(r.output, "not orientable:"));
  CHECK(contains(r.output, "no precedence orients"));
}

TEST_CASE("finite finds and re-checks the size-2 witness") {
  RunResult r = run("finite --problem " + fixture("assoc_not_comm.p") +
                    " --max-size 2");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "model of size 2:"));
  CHECK(contains(r.output, "independent check: passed"));
}

TEST_CASE("finite --json carries the verified witness") {
  RunResult r = run("finite --problem " + fixture("assoc_not_comm.p") +
                    " --max-size 2 --json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["witness_found"] == true);
  CHECK(j["witness_size"] == 2);
  CHECK(j["verified"] == true);
  CHECK(j["witness"]["size"] == 2);
}

TEST_CASE("finite exits 6 when no model exists up to the bound") {
  RunResult r = run("finite --problem " + fixture("p477_1426.p") +
                    " --max-size 3");
  CHECK(r.code == 6);
  CHECK(contains(r.output, "no finite model up to size 3"));
}

TEST_CASE("finite enforces the size ceiling unless --allow-large") {
  RunResult capped = run("finite --problem " + fixture("assoc_not_comm.p") +
                         " --max-size 5");
  CHECK(capped.code == 2);
  CHECK(contains(capped.output, "config error:"));

  std::string idem = write_temp("idem.p", "cnf(ax, axiom, mul(X, X) = X).\n");
  RunResult raised = run("finite --problem " + idem +
                         " --max-size 5 --allow-large");
  CHECK(raised.code == 0);
  CHECK(contains(raised.output, "raising the finite-model ceiling"));
  CHECK(contains(raised.output, "model of size 1:"));
}

TEST_CASE("etp list --count-only prints the frozen totals") {
  RunResult r = run("etp list --count-only");
  CHECK(r.code == 0);
  CHECK(r.output == "count: 4694\nimplication pairs: 22028942\n");
}

TEST_CASE("etp list enumerates the one-operation prefix in order") {
  RunResult r = run("etp list --max-ops 1");
  CHECK(r.code == 0);
  CHECK(r.output ==
        "1\tx = x\n"
        "2\tx = y\n"
        "3\tx = x * x\n"
        "4\tx = x * y\n"
        "5\tx = y * x\n"
        "6\tx = y * y\n"
        "7\tx = y * z\n"
        "count: 7\n"
        "implication pairs: 42\n");
}

TEST_CASE("etp gen 118 274 reproduces the shipped implication problem") {
  RunResult r = run("etp gen 118 274");
  REQUIRE(r.code == 0);
  ueq::Problem generated = ueq::parse_problem(r.output);
  ueq::Problem shipped = ueq::parse_problem([] {
    std::ifstream in(fixture("p118_274.p"));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }());
  CHECK(generated.axioms == shipped.axioms);
  CHECK(generated.disequations == shipped.disequations);
  CHECK(contains(r.output, "cnf(premise, axiom,"));
  CHECK(contains(r.output, "cnf(goal, negated_conjecture,"));
}

TEST_CASE("etp gen rejects out-of-range indices") {
  RunResult low = run("etp gen 0 1");
  CHECK(low.code == 2);
  CHECK(contains(low.output, "equation indices must be in 1..4694"));
  RunResult high = run("etp gen 4695 1");
  CHECK(high.code == 2);
}

TEST_CASE("file and parse failures exit 2, fragment violations exit 1") {
  RunResult missing = run("normalize --term a --problem /no/such/file.p");
  CHECK(missing.code == 2);

  std::string broken = write_temp("broken.p", "cnf(oops, axiom, f(a\n");
  RunResult parse = run("normalize --term a --problem " + broken);
  CHECK(parse.code == 2);
  CHECK(contains(parse.output, "parse error:"));

  std::string pred = write_temp("pred.p", "cnf(c, axiom, p(X)).\n");
  RunResult fragment = run("normalize --term a --problem " + pred);
  CHECK(fragment.code == 1);
  CHECK(contains(fragment.output, "fragment error:"));
}

TEST_CASE("CLI misuse exits 2, --help exits 0") {
  CHECK(run("").code == 2);
  CHECK(run("normalize --term a --no-such-flag").code == 2);
  RunResult help = run("--help");
  CHECK(help.code == 0);
  CHECK(contains(help.output, "normalize"));
  CHECK(contains(help.output, "check-model"));
}

}  // TEST_SUITE
