// exit-status and output contract of the command-line front end

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string outfile = "/tmp/geo_cli_test_out.txt";
  std::string cmd = std::string(GEO_CLI) + " " + args + " > " + outfile +
                    " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(outfile);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("run: all-pass script exits 0") {
  auto r = run_cli("run " GEO_SOURCE_DIR "/scripts/basics.geo");
  CHECK(r.status == 0);
  CHECK(r.out.find("summary pass=") != std::string::npos);
}

TEST_CASE("run: failing assertion exits 1 with a FAIL line") {
  auto path = write_temp("fail.geo",
                         "point a = (0,0)\npoint b = (1,0)\nassert B(a,b,a)\n");
  auto r = run_cli("run " + path);
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("run: construction error exits 1") {
  auto r = run_cli("run " GEO_SOURCE_DIR "/scripts/undefined.geo");
  CHECK(r.status == 1);
  CHECK(r.out.find("ERROR") != std::string::npos);
}

TEST_CASE("run: parse error exits 2") {
  auto path = write_temp("bad.geo", "point a = (0,0\n");
  auto r = run_cli("run " + path);
  CHECK(r.status == 2);
}

TEST_CASE("run: missing file exits 3") {
  auto r = run_cli("run /tmp/definitely_not_here.geo");
  CHECK(r.status == 3);
}

TEST_CASE("run: json output parses strictly") {
  auto r = run_cli("run " GEO_SOURCE_DIR "/scripts/trisect.geo --format json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("axioms: clean subset run exits 0, violations would exit 1") {
  auto r = run_cli("axioms --n 5 --seed 1 --filter AX0* --format json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["specs"].size() == 9);
}

TEST_CASE("axioms: full suite at n=100 in desk-scale time") {
  auto r = run_cli("axioms --n 100 --seed 1 --format json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["specs"].size() == 36);
  CHECK(j["summary"]["violations"] == 0);
}

TEST_CASE("seed reproducibility end to end") {
  auto r1 = run_cli("axioms --n 6 --seed 9 --filter AX1* --format json");
  auto r2 = run_cli("axioms --n 6 --seed 9 --filter AX1* --format json");
  REQUIRE(r1.status == 0);
  auto j1 = nlohmann::json::parse(r1.out);
  auto j2 = nlohmann::json::parse(r2.out);
  CHECK(j1["specs"] == j2["specs"]);
}

TEST_CASE("render writes a well-formed file and exits 0") {
  auto r = run_cli("render " GEO_SOURCE_DIR
                   "/scripts/trisect.geo --out /tmp/geo_cli_tri.svg");
  CHECK(r.status == 0);
  std::ifstream svg("/tmp/geo_cli_tri.svg");
  std::ostringstream ss;
  ss << svg.rdbuf();
  CHECK(ss.str().rfind("<?xml", 0) == 0);
  CHECK(ss.str().find("</svg>") != std::string::npos);
}

TEST_CASE("render on an erroring script exits 1") {
  auto r = run_cli("render " GEO_SOURCE_DIR
                   "/scripts/undefined.geo --out /tmp/geo_cli_undef.svg");
  CHECK(r.status == 1);
}
