#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "test_support.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the cospec binary, capturing stdout. stderr is left alone so test
// logs keep any diagnostics.
RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(COSPEC_CLI_PATH) + " " + args;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const char* name) { return ts::fixture_path(name); }

}  // namespace

TEST_CASE("spectrum command") {
  const RunResult r = run("spectrum " + fixture("gm8.sg") + " 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 8);
  REQUIRE(j.contains("char_poly"));
  REQUIRE(j.contains("eigenvalues_approx"));
  REQUIRE(j.contains("inputs"));
  // coefficients are decimal strings, constant term first
  const auto expected = ts::expected_gm8_poly();
  REQUIRE(j["char_poly"].size() == expected.coeffs.size());
  for (std::size_t k = 0; k < expected.coeffs.size(); ++k)
    CHECK(j["char_poly"][k].get<std::string>() == expected.coeffs[k].str());
}

TEST_CASE("verify command exit codes") {
  SUBCASE("a file against itself") {
    CHECK(run("verify " + fixture("gm8.sg") + " " + fixture("gm8.sg") + " 2>/dev/null")
              .exit_code == 0);
  }
  SUBCASE("cospectral pair") {
    const std::string switched_file = "/tmp/cospec_test_gm8_switched.sg";
    REQUIRE(run("gm " + fixture("gm8.sg") + " --partition \"C:0,1,2 C:3,4,5,6 D:7\" -o " +
                switched_file + " 2>/dev/null")
                .exit_code == 0);
    const RunResult r =
        run("verify " + fixture("gm8.sg") + " " + switched_file + " 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["cospectral"] == true);
  }
  SUBCASE("non-cospectral pair exits 1") {
    std::ofstream("/tmp/cospec_tri_pos.sg") << "3 3\n0 1 +\n1 2 +\n0 2 +\n";
    std::ofstream("/tmp/cospec_tri_neg.sg") << "3 3\n0 1 +\n1 2 +\n0 2 -\n";
    const RunResult r = run("verify /tmp/cospec_tri_pos.sg /tmp/cospec_tri_neg.sg 2>/dev/null");
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.out)["cospectral"] == false);
  }
}

TEST_CASE("gm command") {
  SUBCASE("admissible partition") {
    const RunResult r = run("gm " + fixture("gm8.sg") +
                            " --partition \"C:0,1,2 C:3,4,5,6 D:7\" 2>/dev/null");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["admissible"] == true);
    CHECK(j["cospectral"] == true);
    CHECK(j["conjugation_verified"] == true);
    CHECK(j["cases"].size() == 2);
    // switched graph text re-parses to the library's own result
    const cospec::SignedGraph h =
        cospec::parse_graph(j["switched_graph"]["text"].get<std::string>());
    CHECK(h == cospec::gm_switch(ts::graph_from(ts::kGm8), ts::gm8_partition()));
  }
  SUBCASE("inadmissible partition exits 1") {
    const RunResult r = run("gm " + fixture("gm8.sg") +
                            " --partition \"C:0,1,2,3 D:4,5,6,7\" 2>/dev/null");
    CHECK(r.exit_code == 1);
    const json j = json::parse(r.out);
    CHECK(j["admissible"] == false);
    CHECK(j.contains("violation"));
  }
  SUBCASE("bad partition grammar exits 2") {
    CHECK(run("gm " + fixture("gm8.sg") + " --partition \"X:0,1\" 2>/dev/null").exit_code == 2);
    CHECK(run("gm " + fixture("gm8.sg") + " --partition \"C:0,a\" 2>/dev/null").exit_code == 2);
    CHECK(run("gm " + fixture("gm8.sg") + " --partition \"D:0 D:1\" 2>/dev/null").exit_code ==
          2);
  }
  SUBCASE("missing file exits 2") {
    CHECK(run("gm /nonexistent.sg --partition \"C:0\" 2>/dev/null").exit_code == 2);
  }
}

TEST_CASE("ggm command") {
  const RunResult r =
      run("ggm " + fixture("ggm14.sg") + " --v1 0,1,2,3,4 --v2 5,6,7,8,9 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["admissible"] == true);
  CHECK(j["ell"] == -1);
  CHECK(j["cospectral"] == true);
  CHECK(j["conjugation_verified"] == true);
}

TEST_CASE("iso command") {
  std::ofstream("/tmp/cospec_k2a.sg") << "2 1\n0 1 +\n";
  std::ofstream("/tmp/cospec_k2b.sg") << "2 1\n0 1 -\n";
  const RunResult r = run("iso /tmp/cospec_k2a.sg /tmp/cospec_k2b.sg 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["isomorphic"] == true);
  REQUIRE(j.contains("certificate"));
  CHECK(j["certificate"].contains("perm"));
  CHECK(j["certificate"].contains("u_set"));
  const RunResult u =
      run("iso --underlying /tmp/cospec_k2a.sg /tmp/cospec_k2b.sg 2>/dev/null");
  CHECK(json::parse(u.out)["isomorphic"] == true);
}

TEST_CASE("search command") {
  const RunResult r = run("search gm " + fixture("gm8.sg") + " --t-max 2 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"].get<int>() > 0);
  CHECK(j["truncated"] == false);
  bool found = false;
  for (const auto& p : j["partitions"])
    if (p["string"] == "C:0,1,2 C:3,4,5,6 D:7") found = true;
  CHECK(found);
}

TEST_CASE("search respects the environment budget") {
  const RunResult r = run("search gm " + fixture("gm8.sg") + " --t-max 4 2>/dev/null",
                          "COSPEC_BUDGET_SECS=0.000001");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["truncated"] == true);
}

TEST_CASE("gen command round-trips") {
  const std::string out_file = "/tmp/cospec_gen_roundtrip.sg";
  const RunResult r =
      run("gen gm --seed 5 --parts 4,4 --d 2 -o " + out_file + " 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  // the written file parses back to exactly the emitted graph
  const cospec::SignedGraph loaded = cospec::load_graph_file(out_file);
  CHECK(loaded == cospec::parse_graph(j["graph"]["text"].get<std::string>()));
  // and the emitted partition is admissible for it
  const RunResult check = run("gm " + out_file + " --partition \"" +
                              j["partition"]["string"].get<std::string>() + "\" 2>/dev/null");
  CHECK(check.exit_code == 0);
  CHECK(json::parse(check.out)["admissible"] == true);
}

TEST_CASE("pipeline command finds the shipped instances") {
  SUBCASE("gm fixture") {
    const RunResult r = run("pipeline gm " + fixture("gm8.sg") + " --t-max 2 2>/dev/null");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    bool found = false;
    for (const auto& ping : j["pings"])
      if (ping["partition"]["string"] == "C:0,1,2 C:3,4,5,6 D:7") {
        found = true;
        CHECK(ping["cospectral"] == true);
        CHECK(ping["switching_isomorphic"] == "non_isomorphic");
      }
    CHECK(found);
  }
  SUBCASE("empty graph yields no pings") {
    std::ofstream("/tmp/cospec_empty.sg") << "4 0\n";
    const RunResult r = run("pipeline gm /tmp/cospec_empty.sg 2>/dev/null");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["pings"].empty());
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("frobnicate 2>/dev/null").exit_code == 2);
  CHECK(run("search sideways " + fixture("gm8.sg") + " 2>/dev/null").exit_code == 2);
  CHECK(run("2>/dev/null").exit_code == 2);
}
