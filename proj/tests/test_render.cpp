#include <vector>

#include "doctest.h"
#include "geo/render.hpp"

using namespace geo;

namespace {

// minimal XML well-formedness scan: tag balance and quoting
bool well_formed_xml(const std::string& s) {
  std::vector<std::string> stack;
  size_t i = 0;
  if (s.rfind("<?xml", 0) != 0) return false;
  i = s.find("?>");
  if (i == std::string::npos) return false;
  i += 2;
  while (i < s.size()) {
    if (s[i] != '<') {
      ++i;
      continue;
    }
    size_t close = s.find('>', i);
    if (close == std::string::npos) return false;
    std::string tag = s.substr(i + 1, close - i - 1);
    if (!tag.empty() && tag[0] == '/') {
      std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!tag.empty() && tag.back() != '/') {
      std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
      stack.push_back(name);
    }
    i = close + 1;
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("trisection figure") {
  auto res = script::parse(
      "point a = (0,0)\npoint b = (3,3)\n"
      "let c = trisect1(a,b)\nlet d = trisect2(a,b)\n"
      "assert B(a,c,d)\nassert B(c,d,b)\nassert C(a,c,c,d)\n");
  REQUIRE(res.ok());
  std::map<std::string, Point> env;
  auto report = script::evaluate(*res.script, &env);
  REQUIRE(report.errors() == 0);
  std::string svg = render::to_svg(*res.script, env);
  CHECK(well_formed_xml(svg));
  for (const char* name : {">a<", ">b<", ">c<", ">d<"})
    CHECK(svg.find(name) != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
}

TEST_CASE("empty script renders a minimal valid svg") {
  auto res = script::parse("");
  REQUIRE(res.ok());
  std::map<std::string, Point> env;
  script::evaluate(*res.script, &env);
  std::string svg = render::to_svg(*res.script, env);
  CHECK(well_formed_xml(svg));
  CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("3d points carry dashed offset markers") {
  auto res = script::parse(
      "point a = (0,0,0)\npoint b = (1,0,0)\npoint c = (0,1,0)\n"
      "let o = ortho(b,a,c)\nassert PL(a,b,c,o) == false\n");
  REQUIRE(res.ok());
  std::map<std::string, Point> env;
  auto report = script::evaluate(*res.script, &env);
  REQUIRE(report.errors() == 0);
  std::string svg = render::to_svg(*res.script, env);
  CHECK(well_formed_xml(svg));
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
}
