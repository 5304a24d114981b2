// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "expr_gen.hpp"
#include "geo/conformance.hpp"
#include "geo/constructions.hpp"
#include "geo/script.hpp"

namespace {

int g_failures = 0;

void verdict(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using namespace geo;
using conf::RelEval;
using conf::run_suite;
using conf::SuiteKind;

// ---- criterion 1: full axiom suite -----------------------------------

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  auto report = run_suite(SuiteKind::Axioms, "", 42, 1000);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  bool ok = report.specs.size() == 36 && report.total_violations() == 0;
  for (const auto& s : report.specs)
    if (s.exhausted) ok = false;
  bool in_time = secs < 300.0;
  std::ostringstream d;
  d << report.specs.size() << " specs, n=1000, "
    << report.total_violations() << " violations, " << secs << "s";
  verdict("criterion-1 axiom suite", ok && in_time, d.str());
}

// ---- criterion 2: theorem suite --------------------------------------

void criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  auto report = run_suite(SuiteKind::Theorems, "", 42, 200);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  bool ok = !report.specs.empty() && report.total_violations() == 0;
  long exhausted = 0;
  for (const auto& s : report.specs)
    if (s.exhausted) ++exhausted;
  ok = ok && exhausted == 0;
  std::ostringstream d;
  d << report.specs.size() << " specs, n=200, "
    << report.total_violations() << " violations, " << exhausted
    << " exhausted, " << secs << "s";
  verdict("criterion-2 theorem suite", ok, d.str());
  if (report.total_violations() != 0)
    std::cout << conf::report_text(report);
}

// ---- criterion 3: exact identities -----------------------------------

void criterion_3() {
  testgen::ExprGen g(2718);
  bool ok = true;
  auto rnd_pt = [&] {
    return Point{g.leaf(), g.leaf(), g.leaf()};
  };
  for (int i = 0; i < 1000 && ok; ++i) {
    Point a = rnd_pt(), b = rnd_pt(), c = rnd_pt(), d = rnd_pt();
    ok = ok && same_point(mid(mid(a, b), mid(c, d)), mid(mid(a, c), mid(b, d)));
    ok = ok && same_point(mid(a, doub(a, b)), b);
  }
  verdict("criterion-3a bisymmetry and mid/doub cancellation (n=1000)", ok,
          "");

  bool tri_ok = true;
  for (int i = 0; i < 200 && tri_ok; ++i) {
    Point a = rnd_pt(), b = rnd_pt();
    if (same_point(a, b)) continue;
    auto [c, d] = trisect(a, b);
    Real third(mpq_class(1, 3));
    tri_ok = tri_ok && same_point(c, a + third * (b - a)) &&
             same_point(d, a + (Real(2) * third) * (b - a)) &&
             seg_congruent(a, c, c, d) && seg_congruent(c, d, d, b);
  }
  verdict("criterion-3b trisection equals affine thirds, congruences exact",
          tri_ok, "");

  Point c1{Real(0), Real(0)}, pa{Real(1), Real(0)}, pb{Real(-1), Real(0)};
  Point c2{Real(1), Real(0)}, pd{Real(1), Real(1)};
  Point m = cci(c1, pa, pb, c2, pd);
  bool cci_ok = m.x.equals(Real(mpq_class(1, 2))) &&
                m.y.equals(Real(3).sqrt() / Real(2)) && m.z.sign() == 0;
  verdict("criterion-3c cci unit-circle example is (1/2, sqrt3/2, 0)", cci_ok,
          "");
}

// ---- criterion 4: number kernel --------------------------------------

void criterion_4() {
  Real s2 = Real(2).sqrt(), s3 = Real(3).sqrt(), s6 = Real(6).sqrt();
  bool id_ok = ((s2 + s3) * (s2 + s3) - Real(5) - Real(2) * s6).sign() == 0;
  verdict("criterion-4a sign((sqrt2+sqrt3)^2 - 5 - 2 sqrt6) = 0", id_ok, "");

  testgen::ExprGen g(161803);
  long agreed = 0, resolved = 0, zeros = 0;
  bool ok = true;
  for (int i = 0; i < 10000 && ok; ++i) {
    Real x = g.gen_expr(5, 4);
    if (i % 10 == 0) {  // engineered zero among the population
      Real y = g.gen_expr(3, 2);
      x = (x + y) - y - x;
    }
    int s;
    try {
      s = x.sign();
    } catch (...) {
      ok = false;
      break;
    }
    auto iv = x.approx(256);
    if (iv.lo > 0) {
      ++resolved;
      if (s == 1) ++agreed;
      else ok = false;
    } else if (iv.hi < 0) {
      ++resolved;
      if (s == -1) ++agreed;
      else ok = false;
    } else if (s == 0) {
      ++zeros;
    }
  }
  std::ostringstream d;
  d << "10000 expressions, " << resolved << " oracle-resolved, " << agreed
    << " agreed, " << zeros << " exact zeros, no unknown verdicts";
  verdict("criterion-4b sign agrees with the 256-bit interval oracle", ok,
          d.str());
}

// ---- criterion 5: DSL golden corpus + fuzzing ------------------------

void criterion_5() {
  namespace fs = std::filesystem;
  std::vector<std::string> scripts;
  for (const auto& e :
       fs::directory_iterator(std::string(GEO_SOURCE_DIR) + "/scripts"))
    if (e.path().extension() == ".geo") scripts.push_back(e.path().string());
  std::sort(scripts.begin(), scripts.end());

  std::set<std::string> funcs, rels;
  bool ok = scripts.size() >= 10;
  std::string why = ok ? "" : "fewer than 10 scripts";
  for (const auto& path : scripts) {
    auto res = script::parse(slurp(path));
    if (!res.ok()) {
      ok = false;
      why = "parse failure in " + path;
      break;
    }
    for (const auto& st : res.script->statements) {
      if (st.kind == script::Statement::Kind::Let) funcs.insert(st.callee);
      if (st.kind == script::Statement::Kind::Assert ||
          st.kind == script::Statement::Kind::Query)
        rels.insert(st.callee);
    }
    auto report = script::evaluate(*res.script);
    std::string got =
        script::format_report(report, script::ReportFormat::Json);
    std::string gpath = std::string(GEO_SOURCE_DIR) + "/tests/golden/" +
                        fs::path(path).stem().string() + ".json";
    if (got != slurp(gpath)) {
      ok = false;
      why = "report drifted from golden for " + path;
      break;
    }
  }
  if (ok)
    for (const auto& f : construction_table())
      if (!funcs.count(f.name)) {
        ok = false;
        why = std::string("construction not covered: ") + f.name;
      }
  if (ok)
    for (const auto& r : relation_table())
      if (r.in_script && !rels.count(r.name)) {
        ok = false;
        why = std::string("relation not covered: ") + r.name;
      }
  std::ostringstream d;
  d << scripts.size() << " scripts, " << funcs.size() << " constructions, "
    << rels.size() << " relations" << (why.empty() ? "" : ("; " + why));
  verdict("criterion-5a golden corpus pinned and covering", ok, d.str());

  std::uint64_t s = 777;
  auto next = [&] {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  const std::string alphabet =
      "abcdxyz0123456789 ()=,+-*/#.\npointletassertqueryBLTCsqrtmidextcb\t";
  bool fuzz_ok = true;
  try {
    for (int i = 0; i < 100000; ++i) {
      std::string input;
      size_t len = next() % 100;
      for (size_t j = 0; j < len; ++j)
        input += alphabet[next() % alphabet.size()];
      auto res = script::parse(input);
      if (res.ok()) script::evaluate(*res.script);
    }
  } catch (...) {
    fuzz_ok = false;
  }
  verdict("criterion-5b parser fuzzing, 100000 inputs, no crash", fuzz_ok, "");
}

// ---- criterion 6: mutation sensitivity -------------------------------

void criterion_6() {
  using geo::Rel;
  bool all_caught = true;
  std::string missed;
  for (const auto& info : relation_table()) {
    RelEval flipped;
    flipped.flips.insert(info.kind);
    auto report = run_suite(SuiteKind::All, "", 5, 8, flipped, 0);
    bool caught = false;
    for (const auto& sr : report.specs)
      if (sr.violation_count > 0 || sr.exhausted) caught = true;
    if (!caught) {
      all_caught = false;
      missed += std::string(info.name) + " ";
    }
  }
  verdict("criterion-6 every flipped predicate breaks the suite", all_caught,
          missed.empty() ? "24 predicates flipped" : ("missed: " + missed));
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::cout << (g_failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED")
            << " in " << secs << "s" << std::endl;
  return g_failures ? 1 : 0;
}
