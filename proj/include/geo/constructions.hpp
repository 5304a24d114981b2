#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geo/point.hpp"

namespace geo {

// Constructions applied outside their domain stay undefined; callers get a
// ConstructionError carrying the offending points.
struct ConstructionError : std::domain_error {
  enum class Reason { UndefinedOutsideDomain, DegenerateInput };
  std::string construction;
  Reason reason;
  std::vector<Point> witness;

  ConstructionError(std::string name, Reason r, std::vector<Point> w)
      : std::domain_error(name + ": " +
                          (r == Reason::UndefinedOutsideDomain
                               ? "undefined outside domain"
                               : "degenerate input")),
        construction(std::move(name)),
        reason(r),
        witness(std::move(w)) {}
};

// ext(ab,cd): extends ab beyond b by the length of cd. pre: a != b.
Point ext(const Point& a, const Point& b, const Point& c, const Point& d);
// doub(a,b) = ext(ab,ab), with doub(a,a) = a.
Point doub(const Point& a, const Point& b);
// lf(ab,cd) = ext(doub(b,a),a,c,d): lays |cd| off from a towards b.
Point lf(const Point& a, const Point& b, const Point& c, const Point& d);
Point mid(const Point& a, const Point& b);
// ats(abc,def): transports angle abc to the base d,e on f's side, with the
// new terminal side congruent to bc. pre: T(a,b,c) and T(d,e,f).
Point ats(const Point& a, const Point& b, const Point& c, const Point& d,
          const Point& e, const Point& f);
// ato(abc,def) = ats(abc, d, e, doub(f,e)): same, on the far side.
Point ato(const Point& a, const Point& b, const Point& c, const Point& d,
          const Point& e, const Point& f);
// cb(d,abc): where line bd crosses segment ac. pre: OO(dba,dbc).
Point crossbow(const Point& d, const Point& a, const Point& b, const Point& c);
// cci(c1,a,b,c2,d): intersection of circle(c1,|c1a|) and circle(c2,|c2d|),
// with a on circle 1 inside circle 2 and b on circle 1 outside circle 2;
// of the two solutions, deterministically the one on the positive side of
// the oriented line c1->c2 in the frame derived from a - c1.
Point cci(const Point& c1, const Point& a, const Point& b, const Point& c2,
          const Point& d);
// The mate of cci: reflection across the perpendicular foot on line c1c2.
Point cci_second(const Point& c1, const Point& a, const Point& b,
                 const Point& c2, const Point& d);
// o(a,b,c): point making right angles with ba and bc at b.
// pre: a != b and c != b.
Point ortho(const Point& a, const Point& b, const Point& c);
// Foot of the perpendicular from c onto line ab, by reflect-and-crossbow.
// pre: T(a,b,c).
Point drop_perp(const Point& a, const Point& b, const Point& c);

// The canonical right angle (alpha, d, beta) with
// d = mid(alpha, lf(beta gamma, alpha beta)).
std::array<Point, 3> right_ref();
// Perpendicular erected at p on line ab, on the side of f. pre: a != b,
// p on line ab, f off it.
Point erect_perp(const Point& p, const Point& a, const Point& b,
                 const Point& f);
// Far endpoint of the perpendicular bisector of ab on the side of f.
Point perp_bisector(const Point& a, const Point& b, const Point& f);
// Apex of an isosceles triangle over base ab.
Point isosceles_apex(const Point& a, const Point& b);
// Point m with angle abm congruent to mbc. pre: T(a,b,c).
Point angle_bisector(const Point& a, const Point& b, const Point& c);
// Division recipe: points (c,d) with ac ~ cd ~ db. pre: a != b.
std::pair<Point, Point> trisect(const Point& a, const Point& b);
// Line-circle continuity: two distinct points of line ab at distance |cd|
// from c. pre: ca < cd, c != d, a != b.
std::pair<Point, Point> line_circle(const Point& c, const Point& d,
                                    const Point& a, const Point& b);
// Segment-circle continuity: the crossing point between a (inside) and b
// (outside). pre: ca < cd < cb, a != b.
Point segment_circle(const Point& c, const Point& d, const Point& a,
                     const Point& b);
// Second common point of the planes through abc and def meeting at x.
// pre: PL_abc(x) and PL_def(x).
Point plane_meet(const Point& a, const Point& b, const Point& c,
                 const Point& d, const Point& e, const Point& f,
                 const Point& x);

// ----------------------------------------------------------------------
// Construction catalogue for the script front end.

struct FuncInfo {
  const char* name;
  int arity;
};
const std::vector<FuncInfo>& construction_table();
const FuncInfo* construction_by_name(const std::string& name);
// Apply by name on `arity` points (script semantics; trisect1/2, lci1/2
// select components of the pair-valued constructions).
Point apply_construction(const std::string& name, std::span<const Point> args);

}  // namespace geo
