#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tmsv/catalog.hpp"
#include "tmsv/errors.hpp"
#include "tmsv/io.hpp"
#include "tmsv/matroid.hpp"

using namespace tmsv;

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + TMSV_CLI_PATH + "\" " + args;
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kDoc = R"({
  "name": "two parallel lines",
  "ground_set": ["1", "2", "3"],
  "bases": [["1", "3"], ["2", "3"]]
})";

}  // namespace

TEST_CASE("parsing explicit-bases documents") {
  std::string name;
  Matroid m = parse_matroid(kDoc, &name);
  CHECK(name == "two parallel lines");
  CHECK(m.labels == std::vector<std::string>{"1", "2", "3"});
  CHECK(m.rank() == 2);
  CHECK(m.bases.size() == 2);

  std::string unnamed = R"({"ground_set": ["a"], "bases": [["a"]]})";
  parse_matroid(unnamed, &name);
  CHECK(name == "matroid");
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_matroid("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_matroid("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_matroid(R"({"bases": [["1"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matroid(R"({"ground_set": ["1"]})"), ParseError);
  CHECK_THROWS_AS(parse_matroid(R"({"ground_set": [1], "bases": [[]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_matroid(R"({"ground_set": ["1", "1"], "bases": [["1"]]})"),
      ParseError);
  CHECK_THROWS_AS(parse_matroid(R"({"ground_set": ["1"], "bases": ["1"]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matroid(R"({"ground_set": ["1"], "bases": [[2]]})"),
                  ParseError);
}

TEST_CASE("axiom violations surface from parsing") {
  CHECK_THROWS_AS(parse_matroid(R"({"ground_set": ["1"], "bases": []})"),
                  EmptyBases);
  CHECK_THROWS_AS(
      parse_matroid(R"({"ground_set": ["1","2"], "bases": [["1"],["1","2"]]})"),
      UnequalCardinality);
  CHECK_THROWS_AS(parse_matroid(R"({"ground_set": ["1"], "bases": [["9"]]})"),
                  ElementNotInGroundSet);
  CHECK_THROWS_AS(
      parse_matroid(
          R"({"ground_set": ["1","2","3","4"], "bases": [["1","2"],["3","4"]]})"),
      ExchangeAxiomFailure);
}

TEST_CASE("loading from the catalog and from files") {
  std::string name;
  Matroid m = load_matroid("catalog:U(2,3)", &name);
  CHECK(name == "U(2,3)");
  CHECK(m.n() == 3);
  CHECK(m.rank() == 2);

  const std::string path = "cli_test_doc.json";
  std::ofstream(path) << kDoc;
  Matroid f = load_matroid(path, &name);
  CHECK(name == "two parallel lines");
  CHECK(f.n() == 3);

  CHECK_THROWS_AS(load_matroid("no_such_file.json"), ParseError);
  CHECK_THROWS_AS(load_matroid("catalog:nonsense"), ParseError);
}

TEST_CASE("check roster") {
  std::vector<std::string> expected = {
      "off-diagonal-vanishing", "diagonal-whitney",       "whitney-identity",
      "spectral-consistency",   "koszul-acyclicity",      "chain-level-soundness",
      "coextension-identity",   "fan-poincare-duality",   "theorem2",
      "stratification-census",  "product-behaviour"};
  CHECK(check_names() == expected);
}

TEST_CASE("info report") {
  Matroid m = catalog_matroid("U(2,2)");
  Json r = info_report(m, "U(2,2)");
  CHECK(r["matroid"] == "U(2,2)");
  CHECK(r["rank"] == 2);
  CHECK(r["whitney"] == Json({1, 2, 1}));
  CHECK(r["admissible_pairs"] == 9);
  CHECK(r["loops"].empty());
  CHECK(!r["reduced_characteristic_polynomial"].is_null());

  Matroid loopy = from_bases({"1", "2"}, std::vector<Mask>{0b01});
  Json lr = info_report(loopy, "loopy");
  CHECK(lr["loops"] == Json({"2"}));
  CHECK(lr["reduced_characteristic_polynomial"].is_null());
}

TEST_CASE("verification report passes on a small matroid") {
  Matroid m = catalog_matroid("U(2,2)");
  PipelineOptions opt;
  bool failed = true;
  Json r = verification_report(m, "U(2,2)", opt, "", &failed);
  CHECK(!failed);
  REQUIRE(r["checks"].size() == check_names().size());
  for (const auto& [check, entry] : r["checks"].items()) {
    CAPTURE(check);
    CHECK(entry["status"] == "pass");
  }
  CHECK(!r["cohomology"].is_null());
  CHECK(r["e_pages"].size() == 3);
}

TEST_CASE("verification report restricted to one check") {
  Matroid m = catalog_matroid("U(1,1)");
  PipelineOptions opt;
  bool failed = true;
  Json r = verification_report(m, "U(1,1)", opt, "theorem2", &failed);
  CHECK(!failed);
  REQUIRE(r["checks"].size() == 1);
  CHECK(r["checks"]["theorem2"]["status"] == "pass");
}

TEST_CASE("size guard skips geometric checks") {
  Matroid m = catalog_matroid("vamos");
  CHECK(!size_guard_ok(m, false));
  CHECK(size_guard_ok(m, true));
  CHECK(size_guard_ok(catalog_matroid("U(3,4)"), false));

  PipelineOptions opt;
  bool failed = true;
  Json r = verification_report(m, "vamos", opt, "", &failed);
  CHECK(!failed);
  CHECK(r["cohomology"].is_null());
  CHECK(r["checks"]["off-diagonal-vanishing"]["status"] == "skipped");
  CHECK(r["checks"]["off-diagonal-vanishing"]["details"] ==
        "ground set exceeds the size guard");
  CHECK(r["checks"]["whitney-identity"]["status"] == "pass");
  CHECK(r["checks"]["koszul-acyclicity"]["status"] == "pass");
  CHECK(r["checks"]["coextension-identity"]["status"] == "pass");
  CHECK(r["checks"]["product-behaviour"]["status"] == "pass");
  CHECK(r["checks"]["spectral-consistency"]["status"] == "skipped");
  CHECK(r["checks"]["spectral-consistency"]["details"] ==
        "page vs cohomology comparison skipped (size guard); euler check "
        "passed");
}

TEST_CASE("reports are byte-stable") {
  Matroid m = catalog_matroid("ex82");
  PipelineOptions opt;
  bool f1 = false, f2 = false;
  std::string a = verification_report(m, "ex82", opt, "", &f1).dump(2);
  std::string b =
      verification_report(catalog_matroid("ex82"), "ex82", opt, "", &f2).dump(2);
  CHECK(a == b);
  CHECK(fan_report(m, "ex82").dump() == fan_report(m, "ex82").dump());
}

TEST_CASE("stratification poset export") {
  const std::string expected =
      "digraph stratification {\n"
      "  \"M(∅,∅)\";\n"
      "  \"M(∅,1)\";\n"
      "  \"M(1,1)\";\n"
      "  \"M(∅,∅)\" -> \"M(∅,1)\";\n"
      "  \"M(1,1)\" -> \"M(∅,1)\";\n"
      "}\n";
  CHECK(export_stratification_dot(catalog_matroid("U(1,1)")) == expected);

  auto count_lines = [](const std::string& dot, bool edges) {
    std::istringstream in(dot);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      if (line.rfind("  \"", 0) != 0) continue;
      bool is_edge = line.find(" -> ") != std::string::npos;
      if (is_edge == edges) ++n;
    }
    return n;
  };
  std::string dot22 = export_stratification_dot(catalog_matroid("U(2,2)"));
  CHECK(count_lines(dot22, false) == 9);
  std::string dot82 = export_stratification_dot(catalog_matroid("ex82"));
  CHECK(count_lines(dot82, false) == 12);
  CHECK(dot82.find("\"M(∅,∅)\" -> ") != std::string::npos);
}

TEST_CASE("command exit codes") {
  CHECK(run_cli("info --matroid 'catalog:U(2,2)' --quiet") == 0);
  CHECK(run_cli("catalog --quiet --json cli_test_catalog.json") == 0);
  CHECK(run_cli("info --matroid 'catalog:nonsense' --quiet") == 2);
  CHECK(run_cli("info --quiet") == 2);
  CHECK(run_cli("bogus-verb --quiet 2>/dev/null") == 2);
  CHECK(run_cli("verify bogus-check --matroid 'catalog:U(1,1)' --quiet") == 2);
  CHECK(run_cli("cohomology --matroid 'catalog:vamos' --quiet") == 2);
  CHECK(run_cli("fan --matroid 'catalog:vamos' --quiet") == 2);
  CHECK(run_cli("verify all --matroid 'catalog:U(2,2)' --quiet "
                "--json /no/such/dir/out.json") == 2);

  Json cat = Json::parse(slurp("cli_test_catalog.json"));
  auto names = cat["catalog"].get<std::vector<std::string>>();
  CHECK(std::find(names.begin(), names.end(), "U(r,n)") != names.end());
  CHECK(std::find(names.begin(), names.end(), "ex82") != names.end());
  CHECK(std::find(names.begin(), names.end(), "vamos") != names.end());
}

TEST_CASE("verify command writes a passing report") {
  CHECK(run_cli("verify all --matroid 'catalog:U(2,2)' --quiet "
                "--json cli_test_verify.json") == 0);
  Json r = Json::parse(slurp("cli_test_verify.json"));
  REQUIRE(r["checks"].size() == check_names().size());
  for (const auto& [check, entry] : r["checks"].items()) {
    CAPTURE(check);
    CHECK(entry["status"] == "pass");
  }

  CHECK(run_cli("verify off-diagonal-vanishing --matroid 'catalog:vamos' "
                "--quiet --json cli_test_skip.json") == 0);
  Json s = Json::parse(slurp("cli_test_skip.json"));
  REQUIRE(s["checks"].size() == 1);
  CHECK(s["checks"]["off-diagonal-vanishing"]["status"] == "skipped");
}

TEST_CASE("json reports on disk are byte-stable") {
  CHECK(run_cli("faces --matroid 'catalog:ex82' --quiet --json cli_test_a.json") ==
        0);
  CHECK(run_cli("faces --matroid 'catalog:ex82' --quiet --json cli_test_b.json") ==
        0);
  CHECK(slurp("cli_test_a.json") == slurp("cli_test_b.json"));
}

TEST_CASE("dot export goes to stdout unframed") {
  CHECK(run_cli("export-dot --matroid \"catalog:U(1,1)\" "
                "> cli_test_dot.txt 2>/dev/null") == 0);
  CHECK(slurp("cli_test_dot.txt") ==
        export_stratification_dot(catalog_matroid("U(1,1)")));
}

TEST_CASE("timing goes to stderr only") {
  CHECK(run_cli("info --matroid 'catalog:U(1,1)' "
                "> cli_test_out.txt 2> cli_test_err.txt") == 0);
  CHECK(slurp("cli_test_out.txt").find("elapsed_ms") == std::string::npos);
  CHECK(slurp("cli_test_err.txt").find("elapsed_ms") != std::string::npos);
  Json r = Json::parse(slurp("cli_test_out.txt"));
  CHECK(r["matroid"] == "U(1,1)");
}
