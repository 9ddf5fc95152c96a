// End-to-end tests for the polyad binary. Each case runs the real executable
// (path injected by CMake as POLYAD_CLI_PATH), captures stdout and stderr
// merged, and compares bytes and exit codes.

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "polyad/finite_table.hpp"
#include "polyad/json_io.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string text;
};

CliResult run_cli(const std::string& args, const std::string& stdin_path = "") {
  std::string command = std::string("'") + POLYAD_CLI_PATH + "' " + args;
  command += " < " + (stdin_path.empty() ? std::string("/dev/null") : stdin_path);
  command += " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.text.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fixture(const std::string& name) {
  return std::string(POLYAD_SOURCE_DIR) + "/fixtures/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("reduce prints one reduced word per line") {
  CliResult r = run_cli("reduce 'u v1 v1^-1 u'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "u^2\n");

  r = run_cli("reduce 'u u^-1'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "1\n");

  r = run_cli("reduce --alphabet u,v1 'u v1' 'v1^-1'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "u v1\nv1^-1\n");

  r = run_cli("reduce --json 'u v1 v1^-1 u'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "[\n  \"u^2\"\n]\n");
}

TEST_CASE("ht prints exponent sums") {
  CliResult r = run_cli("ht 'u v1 u'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "3\n");

  r = run_cli("ht --alphabet u 'u^-5'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "-5\n");

  r = run_cli("ht --json 'u^2'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "[\n  \"2\"\n]\n");
}

TEST_CASE("nary-eval multiplies in the free polyadic group") {
  CliResult r = run_cli("nary-eval --n 3 u v1 'u^-1'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "u v1 u^-1\n");

  r = run_cli("nary-eval --n 3 u v1");
  CHECK(r.exit_code == 1);
  CHECK(r.text == "error: expected 3 arguments, got 2\n");

  r = run_cli("nary-eval --n 3 'u^2' u 'u^-1'");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.text, "not a carrier element"));

  r = run_cli("nary-eval u u u");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "usage error: one of --n or --triple is required\n");
}

TEST_CASE("nary-eval and skew read triple files") {
  std::string triple = fixture("extracted_n3_s2.json");

  CliResult r = run_cli("nary-eval --triple " + triple + " v1 'u^3' v1");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "v1 u^3 v1\n");

  r = run_cli("skew --triple " + triple + " v1");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "v1^-1\n");

  r = run_cli("nary-eval --triple " + triple + " --n 3 u u u");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "usage error: --triple and --n are mutually exclusive\n");
}

TEST_CASE("skew of free polyadic elements") {
  CliResult r = run_cli("skew --n 3 u");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "u^-1\n");

  r = run_cli("skew --n 4 --alphabet u,v v");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "v^-2\n");

  r = run_cli("skew --n 3 u u");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "usage error: skew takes exactly one word\n");
}

TEST_CASE("retract over words and over a table") {
  CliResult r = run_cli("retract --n 3 --at u 'u^3' v1");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "u^4 v1\n");

  r = run_cli("retract --table " + fixture("table_z4_b1.json") + " --at 0");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "identity: 3\n"
        "1 2 3 0\n"
        "2 3 0 1\n"
        "3 0 1 2\n"
        "0 1 2 3\n");

  r = run_cli("retract --table " + fixture("table_z4_b1.json") +
              " --at 0 --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.text, "\"identity\": 3"));
  CHECK(contains(r.text, "\"at\": 0"));

  r = run_cli("retract --n 3 u u");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "usage error: --at is required\n");
}

TEST_CASE("schreier-basis lists the kernel basis") {
  CliResult r = run_cli("schreier-basis --n 3 --alphabet u,v");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "v u^-1\nu^2\nu v\n");

  r = run_cli("schreier-basis --mod 2 --alphabet u,v --residues 1,0");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "v\nu^2\nu v u^-1\n");

  r = run_cli("schreier-basis --n 3 --alphabet u,v --json");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "{\n"
        "  \"transversal\": [\n"
        "    \"1\",\n"
        "    \"u\"\n"
        "  ],\n"
        "  \"basis\": [\n"
        "    \"v u^-1\",\n"
        "    \"u^2\",\n"
        "    \"u v\"\n"
        "  ]\n"
        "}\n");

  r = run_cli("schreier-basis --alphabet u,v");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "usage error: one of --n or --mod is required\n");
}

TEST_CASE("fold summarizes the subgroup graph") {
  CliResult r = run_cli("fold --alphabet u,v 'u^2' 'v u^-1' 'u v u^-2'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "vertices: 2\nrank: 3\nindex: 2\n");

  r = run_cli("fold --alphabet u,v 'u^2' v");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "vertices: 2\nrank: 2\nindex: infinite\n");

  r = run_cli("fold --alphabet u,v --dot 'u^2' v");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "digraph subgroup {\n"
        "  rankdir=LR;\n"
        "  0 [shape=doublecircle];\n"
        "  0 -> 1 [label=\"u\"];\n"
        "  0 -> 0 [label=\"v\"];\n"
        "  1 -> 0 [label=\"u\"];\n"
        "}\n");
}

TEST_CASE("is-basis prints the verdict and the reason") {
  CliResult r = run_cli("is-basis --alphabet u,v u v");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "is-basis\n"
        "generates the whole group with exactly rank-many elements\n");

  r = run_cli("is-basis --alphabet u,v 'u^2' v");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "not-generating\n"
        "generates a subgroup of infinite index\n");

  r = run_cli("is-basis --alphabet u,v 'u v' v u");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "generates-but-checked-by-rank\n"
        "generates the whole group but has 3 elements, not the rank 2\n");
}

TEST_CASE("extract-hg prints the derived decomposition") {
  CliResult r = run_cli("extract-hg --n 3 --alphabet u,v1");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "n: 3\n"
        "unit: u\n"
        "b: u^3\n"
        "theta(u) = u\n"
        "theta(v1) = u v1 u^-1\n"
        "orbit basis: v1 | u^3 | u v1 u^-1\n");
}

TEST_CASE("basis-pipeline prints all three stages") {
  CliResult r = run_cli("basis-pipeline --n 4 --alphabet u,v");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "kernel_basis: v u^-1 | u v u^-2 | u^3 | u^2 v\n"
        "shifted_basis: v | u v u^-1 | u^4 | u^2 v u\n"
        "orbit_basis: v | u v u^-1 | u^4 | u^2 v u^-2\n");
}

TEST_CASE("cover-extend maps words through the extension") {
  CliResult r = run_cli(
      "cover-extend --n 3 --alphabet u,v1 --target s,t "
      "--images 's t s,t' 'u v1 u'");
  CHECK(r.exit_code == 0);
  CHECK(r.text == "u -> s t s\nv1 -> t\ns t s t s t s\n");

  r = run_cli("cover-extend --n 3 --alphabet u,v1 --target s,t --images s,t,t");
  CHECK(r.exit_code == 1);
  CHECK(r.text == "error: expected 2 images, got 3\n");
}

TEST_CASE("verify-table reports axiom checks") {
  CliResult r = run_cli("verify-table --table " + fixture("table_z4_b1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.text == "ok\n");

  r = run_cli("verify-table --table " + fixture("table_z4_max.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "solvability fails at position 1 with coefficients (0,1): "
        "elements 0 and 1 both yield 1\n");

  r = run_cli("verify-table --table " + fixture("table_z4_b1.json") +
              " --json");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "{\n"
        "  \"q\": 4,\n"
        "  \"n\": 3,\n"
        "  \"ok\": true,\n"
        "  \"failure\": null\n"
        "}\n");

  r = run_cli("verify-table --table -", fixture("table_z4_b1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.text == "ok\n");

  r = run_cli("verify-table --table /nonexistent.json");
  CHECK(r.exit_code == 1);
  CHECK(r.text == "error: cannot open '/nonexistent.json'\n");

  r = run_cli("verify-table");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "usage error: --table is required\n");
}

TEST_CASE("decide-free verdicts over every triple source") {
  std::string freeness =
      "free-with-witness\n"
      "s: 2 k: 3\n"
      "witnesses: v1\n"
      "the set {b} ∪ {theta^j(v_i)} is a basis of the base group\n";

  CliResult r = run_cli("decide-free --extracted --n 3 --alphabet u,v1");
  CHECK(r.exit_code == 0);
  CHECK(r.text == freeness);

  r = run_cli("decide-free --triple " + fixture("extracted_n3_s2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.text == freeness);

  r = run_cli("decide-free --triple -", fixture("extracted_n3_s2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.text == freeness);

  r = run_cli("decide-free --derived --n 3 --alphabet u,v --b 1");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "not-free-rank-obstruction\n"
        "k-1 = 1 is not divisible by n-1 = 2; "
        "the derived structure cannot be free\n");

  r = run_cli("decide-free --derived --n 3 --alphabet u --b 'u^2'");
  CHECK(r.exit_code == 0);
  CHECK(r.text ==
        "out-of-theorem-scope\n"
        "s: 1 k: 1\n"
        "s = 1: the criterion is stated for s > 1 and decides nothing "
        "about rank-1 bases\n");

  r = run_cli("decide-free --derived --n 3 --alphabet u,v --b u");
  CHECK(r.exit_code == 1);
  CHECK(r.text ==
        "error: theta^(n-1) is not conjugation by b (fails on generator v)\n");
}

TEST_CASE("decide-free honors supplied witnesses") {
  CliResult r =
      run_cli("decide-free --extracted --n 3 --alphabet u,v1 --witness v1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.text, "free-with-witness\n"));
  CHECK(contains(r.text, "witnesses: v1\n"));

  r = run_cli("decide-free --extracted --n 3 --alphabet u,v1 --witness u");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.text, "witness-rejected\n"));
  CHECK(contains(r.text, "fewer than k=3 distinct elements"));
}

TEST_CASE("decide-free flag validation") {
  CliResult r = run_cli("decide-free --extracted --derived --n 3 --alphabet u,v1");
  CHECK(r.exit_code == 2);
  CHECK(r.text ==
        "usage error: exactly one of --triple, --extracted, --derived "
        "is required\n");

  r = run_cli("decide-free --extracted --alphabet u,v1");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "usage error: --extracted/--derived need --n and --alphabet\n");

  r = run_cli("decide-free --triple " + fixture("extracted_n3_s2.json") +
              " --n 4");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "usage error: --n disagrees with the triple's arity\n");
}

TEST_CASE("decide-free --json emits the full report") {
  CliResult r = run_cli("decide-free --extracted --n 3 --alphabet u,v1 --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.text, "\"verdict\": \"free-with-witness\""));
  CHECK(contains(r.text, "\"tuples_tried\": 3"));
  CHECK(contains(r.text, "\"index\": 2"));
}

TEST_CASE("word syntax errors exit 2 with a position") {
  CliResult r = run_cli("reduce 'u^'");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "parse error at position 3: malformed exponent in 'u^'\n");

  r = run_cli("ht --alphabet u v");
  CHECK(r.exit_code == 2);
  CHECK(r.text == "parse error at position 1: unknown generator 'v'\n");
}

TEST_CASE("bad invocations exit 2 and help exits 0") {
  CliResult r = run_cli("frobnicate");
  CHECK(r.exit_code == 2);

  r = run_cli("");
  CHECK(r.exit_code == 2);

  r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.text, "exact calculator for n-ary groups"));
  CHECK(contains(r.text, "decide-free"));
}

TEST_CASE("extracted fixtures stay in sync with extract-hg --json") {
  CliResult r = run_cli("extract-hg --n 3 --alphabet u,v1 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.text == slurp(fixture("extracted_n3_s2.json")));

  r = run_cli("extract-hg --n 4 --alphabet u,v1,v2 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.text == slurp(fixture("extracted_n4_s3.json")));
}

TEST_CASE("table fixtures match their defining formulas") {
  using polyad::FiniteNaryTable;
  using polyad::Json;

  FiniteNaryTable cyc =
      polyad::table_from_json(Json::parse(slurp(fixture("table_z4_b1.json"))));
  CHECK(cyc == polyad::cyclic_derived_table(4, 3, 1));

  std::vector<int> expected;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) {
        expected.push_back(std::max(x, std::max(y, z)));
      }
    }
  }
  FiniteNaryTable mx =
      polyad::table_from_json(Json::parse(slurp(fixture("table_z4_max.json"))));
  CHECK(mx == FiniteNaryTable(4, 3, expected));
}
