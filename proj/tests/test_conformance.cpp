#include <set>

#include "doctest.h"
#include "geo/conformance.hpp"
#include "json.hpp"

using namespace geo::conf;

TEST_CASE("the pinned axiom list is exactly the 36 of the paper") {
  const std::vector<std::string> expected = {
      "AX01-between-distinct",   "AX02-between-symmetry",
      "AX03-between-exclusive",  "AX04-unique-line",
      "AX05-base-triple",        "AX06-so-triangle",
      "AX07-so-reflexive",       "AX08-so-equivalence",
      "AX09-oo-reverse",         "AX10-oo-oo-so",
      "AX11-intersect-oo",       "AX12-crossbow",
      "AX13-triangle-oo",        "AX14-seg-cong-reflexive",
      "AX15-ext-cong",           "AX16-ext-between",
      "AX17-ext-unique",         "AX18-seg-cong-transitive",
      "AX19-ac-triangle",        "AX20-ats-transport",
      "AX21-ats-unique",         "AX22-same-ray-ac",
      "AX23-ac-reflexive",       "AX24-ac-transitive",
      "AX25-sas",                "AX26-pl-triangle",
      "AX27-pl-base",            "AX28-pl-transfer",
      "AX29-ortho-right",        "AX30-perp-ortho-coplanar",
      "AX31-cci",                "AX32-so-ray",
      "AX33-seg-addition",       "AX34-mid-between",
      "AX35-mid-idempotent",     "AX36-bisymmetry",
  };
  REQUIRE(axiom_specs().size() == 36);
  for (size_t i = 0; i < expected.size(); ++i)
    CHECK(axiom_specs()[i].id == expected[i]);
}

TEST_CASE("the pinned theorem list") {
  const std::vector<std::string> expected = {
      "THM-pasch",
      "THM-crossbar",
      "THM-line-separation-1",
      "THM-line-separation-2",
      "THM-line-separation-3",
      "THM-line-separation-4",
      "THM-line-separation-5",
      "THM-ss-props",
      "THM-os-props",
      "THM-ss-rebase",
      "THM-os-rebase",
      "THM-aiat",
      "THM-aiat-converse",
      "THM-par-props",
      "THM-par-pseudo-transitive",
      "THM-par-extend",
      "THM-parallel-coplanar",
      "THM-equidistance",
      "THM-angle-opens",
      "THM-exterior-angle",
      "THM-triangle-inequality",
      "THM-crossbow-feasibility",
      "THM-seg-lt-transitive",
      "THM-seg-lt-layoff",
      "THM-right-supplement",
      "THM-vertical-angles",
      "THM-supplements-congruent",
      "THM-angle-lt-transitive",
      "THM-interior-angle-lt",
      "THM-cong-angle-same-side-ray",
      "THM-suppes-identities",
      "THM-pgram-fourth-point",
      "THM-pgram-props",
      "THM-pgram-transitive",
      "THM-pgram-opposite",
      "THM-convex-quad-interior",
      "THM-convex-quad-pgram",
      "THM-trisect",
      "THM-mid-doub-cancel",
      "THM-drop-perp",
      "THM-ato-opposite",
      "THM-cci-second",
      "THM-line-circle",
      "THM-segment-circle",
      "THM-unique-center",
      "THM-solid-ortho-noncoplanar",
      "THM-solid-prop4",
      "THM-solid-prop13",
      "THM-solid-orthogonals-parallel",
      "THM-solid-para-plane-right",
      "THM-solid-plane-meet",
      "THM-solid-planes-intersect-line",
      "THM-solid-normals-same-plane",
      "THM-solid-os-plane-rebase",
      "THM-solid-ss-plane-rebase",
      "THM-solid-os-plane-props",
      "THM-solid-ss-plane-props",
  };
  REQUIRE(theorem_specs().size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i)
    CHECK(theorem_specs()[i].id == expected[i]);
}

TEST_CASE("crossbow generator produces opposite-orientation tuples") {
  const CheckSpec* spec = find_spec("AX12-crossbow");
  REQUIRE(spec != nullptr);
  Rng rng(7);
  RelEval re;
  int produced = 0;
  while (produced < 10) {
    auto pts = spec->generate(rng);
    if (!pts) continue;
    ++produced;
    REQUIRE(pts->size() == 4);
    const auto& p = *pts;
    CHECK(geo::opposite_orientation(p[0], p[2], p[1], p[0], p[2], p[3]));
  }
  auto res = run_spec(*spec, 7, 10);
  CHECK(res.satisfied == 10);
  CHECK(res.violation_count == 0);
}

TEST_CASE("identical seeds give identical streams") {
  const CheckSpec* spec = find_spec("AX20-ats-transport");
  REQUIRE(spec);
  auto r1 = run_spec(*spec, 99, 20);
  auto r2 = run_spec(*spec, 99, 20);
  CHECK(r1.attempted == r2.attempted);
  CHECK(r1.satisfied == r2.satisfied);
  CHECK(r1.violation_count == r2.violation_count);
}

TEST_CASE("an unsatisfiable premise reports generator exhaustion") {
  CheckSpec doomed;
  doomed.id = "TEST-doomed";
  doomed.default_n = 5;
  doomed.generate = [](Rng&) -> std::optional<std::vector<geo::Point>> {
    return std::vector<geo::Point>{};
  };
  doomed.check = [](std::span<const geo::Point>, const RelEval&) {
    return Outcome{false, true};  // premise never holds
  };
  auto res = run_spec(doomed, 1, 5);
  CHECK(res.exhausted);
  CHECK(res.satisfied == 0);
}

TEST_CASE("suite filters") {
  auto ax = run_suite(SuiteKind::All, "AX*", 1, 3);
  CHECK(ax.specs.size() == 36);
  auto solid = run_suite(SuiteKind::Theorems, "THM-solid-*", 1, 3);
  CHECK(solid.specs.size() == 12);
  auto none = run_suite(SuiteKind::All, "NOPE*", 1, 3);
  CHECK(none.specs.empty());
  CHECK(none.ok());
}

TEST_CASE("small smoke run of every spec is clean") {
  auto report = run_suite(SuiteKind::All, "", 42, 12);
  for (const auto& s : report.specs) {
    CHECK_MESSAGE(s.violation_count == 0, s.id);
    CHECK_MESSAGE(!s.exhausted, s.id);
  }
  CHECK(report.ok());
}

TEST_CASE("suite runs are deterministic") {
  auto a = run_suite(SuiteKind::Axioms, "AX0*", 7, 8);
  auto b = run_suite(SuiteKind::Axioms, "AX0*", 7, 8);
  auto ja = nlohmann::json::parse(report_json(a));
  auto jb = nlohmann::json::parse(report_json(b));
  ja.erase("wall_seconds");
  jb.erase("wall_seconds");
  CHECK(ja == jb);
}

TEST_CASE("flipped predicates are caught, and witnesses replay") {
  for (geo::Rel kind : {geo::Rel::B, geo::Rel::C, geo::Rel::SO}) {
    RelEval flipped;
    flipped.flips.insert(kind);
    auto report = run_suite(SuiteKind::All, "", 11, 6, flipped);
    bool caught = false;
    for (const auto& sr : report.specs)
      if (sr.violation_count > 0 || sr.exhausted) caught = true;
    CHECK(caught);
    // every recorded violation replays to the same verdict standalone
    for (const auto& sr : report.specs) {
      const CheckSpec* spec = find_spec(sr.id);
      REQUIRE(spec);
      for (const auto& v : sr.violations) {
        auto out = spec->check(v.points, flipped);
        CHECK(out.premise);
        CHECK_FALSE(out.conclusion);
      }
    }
  }
}

TEST_CASE("documented full instance counts stay clean") {
  struct Want {
    const char* id;
    long n;
  };
  const Want wants[] = {
      {"THM-seg-lt-layoff", 1000},    {"THM-crossbow-feasibility", 1000},
      {"AX20-ats-transport", 1000},   {"THM-ato-opposite", 1000},
      {"THM-cci-second", 1000},       {"THM-line-circle", 1000},
      {"THM-drop-perp", 1000},        {"THM-solid-planes-intersect-line", 500},
  };
  for (const auto& w : wants) {
    const CheckSpec* spec = find_spec(w.id);
    REQUIRE(spec);
    auto res = run_spec(*spec, 2, w.n);
    CHECK_MESSAGE(res.violation_count == 0, w.id);
    CHECK_MESSAGE(!res.exhausted, w.id);
  }
}

TEST_CASE("report json carries the pinned schema") {
  auto report = run_suite(SuiteKind::Axioms, "AX05*", 3, 4);
  auto j = nlohmann::json::parse(report_json(report));
  REQUIRE(j.contains("specs"));
  REQUIRE(j["specs"].size() == 1);
  CHECK(j["specs"][0].contains("id"));
  CHECK(j["specs"][0].contains("attempted"));
  CHECK(j["specs"][0].contains("satisfied"));
  CHECK(j["specs"][0].contains("violations"));
  CHECK(j["specs"][0].contains("seed"));
  CHECK(j.contains("summary"));
  CHECK(j.contains("version"));
}
