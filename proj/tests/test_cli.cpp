#include <doctest.h>

#include <fstream>
#include <cstdlib>
#include <sstream>

#include "verlinde/cli_commands.hpp"
#include "verlinde/errors.hpp"

using namespace verlinde;
using verlinde::cli::Request;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream f(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(f.good(), ("missing golden fixture " + name).c_str());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("levels command reproduces the golden fixtures byte for byte") {
  Request r;
  r.type = "A3";
  r.center = "full";
  CHECK(cli::cmd_levels(r) == read_golden("levels__type_A3__center_full.json"));
  r.format = "csv";
  CHECK(cli::cmd_levels(r) ==
        read_golden("levels__type_A3__center_full__format_csv.csv"));
  r.format = "json";
  r.type = "D4";
  r.center = "gen:w1";
  CHECK(cli::cmd_levels(r) == read_golden("levels__type_D4__center_gen-w1.json"));
  r.type = "E8";
  r.center = "full";
  CHECK(cli::cmd_levels(r) == read_golden("levels__type_E8__center_full.json"));
}

TEST_CASE("levels output carries the expected values") {
  Request r;
  r.type = "A3";
  r.center = "full";
  std::string out = cli::cmd_levels(r);
  CHECK(out.find("\"Z\": \"Z4\"") != std::string::npos);
  CHECK(out.find("\"k0\": 4") != std::string::npos);
  CHECK(out.find("\"k1\": 4") != std::string::npos);
  r.type = "D4";
  r.center = "gen:w1";
  out = cli::cmd_levels(r);
  CHECK(out.find("\"k0\": 1") != std::string::npos);
  CHECK(out.find("\"k1\": 2") != std::string::npos);
  r.type = "E8";
  r.center = "full";
  out = cli::cmd_levels(r);
  CHECK(out.find("\"Z\": \"1\"") != std::string::npos);
  CHECK(out.find("\"k0\": 1") != std::string::npos);
}

TEST_CASE("delta command tables match their fixtures") {
  Request r;
  r.type = "B3";
  r.k = 5;
  CHECK(cli::cmd_delta(r) == read_golden("delta__type_B3__k_5.json"));
  CHECK(cli::cmd_delta(r).find("\"value\": \"-1\"") != std::string::npos);
  r.type = "C3";
  r.k = 2;
  CHECK(cli::cmd_delta(r) == read_golden("delta__type_C3__k_2.json"));
  r.type = "A2";
  r.k = 3;
  std::string out = cli::cmd_delta(r);
  CHECK(out == read_golden("delta__type_A2__center_full__k_3.json"));
  // every entry of the rank-two table is 1
  CHECK(out.find("\"value\": \"-1\"") == std::string::npos);
  CHECK(out.find("\"match\": false") == std::string::npos);
}

TEST_CASE("delta command rejects inadmissible levels") {
  Request r;
  r.type = "A2";
  r.k = 2;  // k0 = 3
  CHECK_THROWS_AS(cli::cmd_delta(r), precondition_error);
}

TEST_CASE("verlinde command matches fixtures and is deterministic") {
  Request r;
  r.type = "A2";
  r.center = "full";
  r.k = 3;
  r.genus = 1;
  r.mu = "0,0";
  std::string first = cli::cmd_verlinde(r);
  CHECK(first ==
        read_golden("verlinde__type_A2__center_full__k_3__genus_1__mu_0-0.json"));
  CHECK(first == cli::cmd_verlinde(r));  // byte-identical across runs
  CHECK(first.find("\"Q\": 2") != std::string::npos);

  Request r2;
  r2.type = "A1";
  r2.center = "trivial";
  r2.k = 2;
  r2.genus = 2;
  r2.mu = "0";
  CHECK(cli::cmd_verlinde(r2) ==
        read_golden("verlinde__type_A1__center_trivial__k_2__genus_2__mu_0.json"));

  Request r3 = r2;
  r3.k = 1;
  r3.genus = 1;
  r3.mu = "1";
  std::string out = cli::cmd_verlinde(r3);
  CHECK(out ==
        read_golden("verlinde__type_A1__center_trivial__k_1__genus_1__mu_1.json"));
  CHECK(out.find("\"Q\": 0") != std::string::npos);
}

TEST_CASE("verlinde command validates its request") {
  Request r;
  r.type = "A2";
  r.center = "full";
  r.k = 2;  // not a multiple of k0 = 3
  CHECK_THROWS_AS(cli::cmd_verlinde(r), precondition_error);
  r.k = 3;
  r.mu = "7,0";  // outside the level
  CHECK_THROWS_AS(cli::cmd_verlinde(r), precondition_error);
  r.mu = "";
  r.phi = "1";  // wrong tuple count
  CHECK_THROWS_AS(cli::cmd_verlinde(r), precondition_error);
}

TEST_CASE("roots and smatrix commands emit well-formed tables") {
  Request r;
  r.type = "G2";
  std::string out = cli::cmd_roots(r);
  CHECK(out.find("\"coxeter_number\": 6") != std::string::npos);
  CHECK(out.find("\"metric_scale\": \"3\"") != std::string::npos);

  Request s;
  s.type = "A1";
  s.k = 1;
  std::string sm = cli::cmd_smatrix(s);
  CHECK(sm.find("\"num_weights\": 2") != std::string::npos);
  CHECK(sm.find("\"torus_order\": \"6\"") != std::string::npos);
}

TEST_CASE("center specs parse or fail with clear errors") {
  RootDatum rd = build_root_datum(LieType::parse("D4"));
  CHECK(cli::parse_center(rd, "trivial").size() == 1);
  CHECK(cli::parse_center(rd, "full").size() == 4);
  CHECK(cli::parse_center(rd, "gen:w3,w4").size() == 4);
  CHECK_THROWS_AS(cli::parse_center(rd, "gen:w2"), precondition_error);
  CHECK_THROWS_AS(cli::parse_center(rd, "everything"), precondition_error);
}

TEST_CASE("binary exit codes distinguish usage, precondition, residual") {
  auto run = [](const std::string& args) {
    int status = std::system((std::string(CLI_BIN) + " " + args +
                              " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  CHECK(run("levels --type A2 --center full") == 0);
  CHECK(run("levels --typo A2") == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("delta --type A2 --center full --k 2") == 3);   // k0 = 3
  CHECK(run("verlinde --type A1 --center full --k 1 --genus 1") == 3);
  CHECK(run("levels --type Q9") == 3);
  // an absurd tolerance from the environment trips the residual guard
  CHECK(run("verlinde --type A2 --center full --k 3 --genus 2 --mu 1,1"
            " --tolerance 1e-22") == 4);
  int status = std::system(("VERLINDE_TOLERANCE=1e-22 " + std::string(CLI_BIN) +
                            " verlinde --type A2 --center full --k 3 --genus 2"
                            " --mu 1,1 > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == 4);
}

TEST_CASE("smatrix sign normalization flips only the global sign") {
  Request r;
  r.type = "A1";
  r.k = 2;
  r.normalized = true;
  std::string out = cli::cmd_smatrix(r);
  // vacuum entry positive in the debug view
  auto pos = out.find("\"entries\"");
  REQUIRE(pos != std::string::npos);
  CHECK(out.find("-0.5", pos) > out.find("0.5", pos));
}
