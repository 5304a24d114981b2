#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "geo/script.hpp"
#include "json.hpp"

using namespace geo::script;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> golden_scripts() {
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(
           std::string(GEO_SOURCE_DIR) + "/scripts"))
    if (e.path().extension() == ".geo") names.push_back(e.path().string());
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

TEST_CASE("parse a small script") {
  auto res = parse(
      "point a = (0,0,0)\nlet m = mid(a,a)\nassert B(a,m,a) == false\n"
      "assert Lt(a,m,a) == true\nassert T(a,m,a) == false\n");
  REQUIRE(res.ok());
  CHECK(res.script->statements.size() == 5);
  CHECK(res.script->statements[0].kind == Statement::Kind::PointDecl);
  CHECK(res.script->statements[1].kind == Statement::Kind::Let);
  CHECK(res.script->statements[2].kind == Statement::Kind::Assert);
  CHECK(res.script->statements[2].expected == false);
  CHECK(res.script->statements[3].expected == true);

  auto report = evaluate(*res.script);
  CHECK(report.passes() == 5);
  CHECK(report.fails() == 0);
  CHECK(report.errors() == 0);
}

TEST_CASE("diagnostics carry kinds and positions") {
  auto arity = parse("point a = (0,0)\nlet q = mid(a)\n");
  CHECK_FALSE(arity.ok());
  REQUIRE(arity.diagnostics.size() >= 1);
  CHECK(arity.diagnostics[0].kind == Diagnostic::Kind::ArityMismatch);
  CHECK(arity.diagnostics[0].line == 2);

  auto unknown = parse("point a = (0,0)\npoint b = (1,0)\npoint c = (0,1)\nassert Par(a,b,c,d)\n");
  CHECK_FALSE(unknown.ok());
  REQUIRE(unknown.diagnostics.size() >= 1);
  CHECK(unknown.diagnostics[0].kind == Diagnostic::Kind::UnknownIdentifier);
  CHECK(unknown.diagnostics[0].related == "d");

  auto syntax = parse("point a = (0,0\n");
  CHECK_FALSE(syntax.ok());
  CHECK(syntax.diagnostics[0].kind == Diagnostic::Kind::Syntax);

  auto dup = parse("point a = (0,0)\npoint a = (1,1)\n");
  CHECK_FALSE(dup.ok());

  auto badrel = parse("point a = (0,0)\nassert Zap(a)\n");
  CHECK_FALSE(badrel.ok());
  CHECK(badrel.diagnostics[0].kind == Diagnostic::Kind::UnknownIdentifier);
}

TEST_CASE("crlf line endings parse") {
  auto res = parse("point a = (0,0)\r\npoint b = (1,0)\r\nassert Lt(a,b,b)\r\n");
  REQUIRE(res.ok());
  CHECK(res.script->statements.size() == 3);
  CHECK(evaluate(*res.script).passes() == 3);
}

TEST_CASE("numeric literals") {
  auto res = parse(
      "point a = (1/2, sqrt(2), -3)\n"
      "point b = (sqrt(3 + 2 * sqrt(2)), 0)\n"
      "point c = (1 + sqrt(2), 0)\n"
      "assert C(a,b,a,b)\n");
  REQUIRE(res.ok());
  std::map<std::string, geo::Point> env;
  auto report = evaluate(*res.script, &env);
  CHECK(report.errors() == 0);
  CHECK(env.at("b").x.equals(env.at("c").x));  // nested radical identity
  CHECK(env.at("a").z.equals(geo::Real(-3)));
}

TEST_CASE("construction errors become report entries, not crashes") {
  auto res = parse(
      "point d = (0,2)\npoint a = (-1,1)\npoint b = (0,0)\npoint c = (-2,3)\n"
      "let x = cb(d,a,b,c)\n"   // same-side points: undefined
      "assert B(a,x,c)\n"       // depends on the failed binding
      "assert T(a,b,c)\n");
  REQUIRE(res.ok());
  auto report = evaluate(*res.script);
  CHECK(report.errors() == 2);
  CHECK(report.passes() == 5);
  CHECK(report.entries[4].verdict == Verdict::Error);
  CHECK(report.entries[4].error.find("cb") != std::string::npos);
  CHECK(!report.entries[4].witness.empty());
  CHECK(report.entries[6].verdict == Verdict::Pass);
}

TEST_CASE("division by zero in a literal is an error entry") {
  auto res = parse("point a = (1/0, 0)\n");
  REQUIRE(res.ok());
  auto report = evaluate(*res.script);
  CHECK(report.errors() == 1);
}

TEST_CASE("empty script gives an empty report") {
  auto res = parse("# nothing here\n\n");
  REQUIRE(res.ok());
  auto report = evaluate(*res.script);
  CHECK(report.entries.empty());
  CHECK(format_report(report, ReportFormat::Text) ==
        "summary pass=0 fail=0 error=0\n");
}

TEST_CASE("failed assertions record witnesses and exact summary") {
  auto res = parse("point a = (0,0)\npoint b = (1,0)\nassert B(a,b,a)\n");
  REQUIRE(res.ok());
  auto report = evaluate(*res.script);
  CHECK(report.fails() == 1);
  auto json = nlohmann::json::parse(format_report(report, ReportFormat::Json));
  CHECK(json["summary"]["pass"] == 2);
  CHECK(json["summary"]["fail"] == 1);
  CHECK(json["summary"]["error"] == 0);
  CHECK(json["statements"][2]["verdict"] == "fail");
  CHECK(json["statements"][2]["witness"].contains("a"));
}

TEST_CASE("render-parse identity on the golden corpus") {
  for (const auto& path : golden_scripts()) {
    auto res = parse(slurp(path));
    REQUIRE_MESSAGE(res.ok(), path);
    std::string rendered = render(*res.script);
    auto reparsed = parse(rendered);
    REQUIRE_MESSAGE(reparsed.ok(), path);
    CHECK(render(*reparsed.script) == rendered);
    REQUIRE(reparsed.script->statements.size() ==
            res.script->statements.size());
    for (size_t i = 0; i < res.script->statements.size(); ++i) {
      const auto &s1 = res.script->statements[i],
                 &s2 = reparsed.script->statements[i];
      CHECK(s1.kind == s2.kind);
      CHECK(s1.ident == s2.ident);
      CHECK(s1.callee == s2.callee);
      CHECK(s1.args == s2.args);
      CHECK(s1.expected == s2.expected);
    }
  }
}

TEST_CASE("golden corpus covers every construction and relation") {
  std::set<std::string> funcs, rels;
  for (const auto& path : golden_scripts()) {
    auto res = parse(slurp(path));
    REQUIRE(res.ok());
    for (const auto& st : res.script->statements) {
      if (st.kind == Statement::Kind::Let) funcs.insert(st.callee);
      if (st.kind == Statement::Kind::Assert ||
          st.kind == Statement::Kind::Query)
        rels.insert(st.callee);
    }
  }
  for (const auto& f : geo::construction_table())
    CHECK_MESSAGE(funcs.count(f.name) == 1, f.name);
  for (const auto& r : geo::relation_table())
    if (r.in_script) CHECK_MESSAGE(rels.count(r.name) == 1, r.name);
}

TEST_CASE("golden corpus reports are pinned") {
  for (const auto& path : golden_scripts()) {
    auto res = parse(slurp(path));
    REQUIRE(res.ok());
    auto report = evaluate(*res.script);
    std::string got = format_report(report, ReportFormat::Json);
    std::filesystem::path p(path);
    std::string gpath = std::string(GEO_SOURCE_DIR) + "/tests/golden/" +
                        p.stem().string() + ".json";
    CHECK_MESSAGE(got == slurp(gpath), gpath);
  }
}

TEST_CASE("parser fuzzing never crashes") {
  std::uint64_t s = 12345;
  auto next = [&] {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  const std::string alphabet =
      "abcxyz0123456789 ()=,+-*/#.\npointletassertqueryBsqrtmid\t\"\\";
  for (int i = 0; i < 3000; ++i) {
    std::string input;
    size_t len = next() % 120;
    for (size_t j = 0; j < len; ++j)
      input += alphabet[next() % alphabet.size()];
    auto res = parse(input);
    if (res.ok()) evaluate(*res.script);
  }
  CHECK(true);
}
