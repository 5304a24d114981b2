#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geo/point.hpp"

namespace geo {

// Every relation of the system as an exact predicate over coordinates.
// Degenerate queries (repeated points, colinear "angles") come out false or
// Neither; they never raise. The one exception is angle_less, whose
// definition needs the angle-transport construction and so rejects
// non-triangles.

enum class Side { Same, Opposite, Neither };
enum class PairClass { Supplementary, Vertical, Neither };

// B(a,b,c): b strictly interior to segment ac.
bool between(const Point& a, const Point& b, const Point& c);
// L(a,b,c): strict colinearity (three distinct points on a line).
bool colinear(const Point& a, const Point& b, const Point& c);
// L~(a,b,c): colinear or some pair equal.
bool colinear_loose(const Point& a, const Point& b, const Point& c);
// T(a,b,c): pairwise distinct and not colinear.
bool triangle(const Point& a, const Point& b, const Point& c);
// SD(a,b,c): b and c on the same side of a along their common line.
bool same_direction(const Point& a, const Point& b, const Point& c);
// C(ab,cd): segment congruence; null segments allowed.
bool seg_congruent(const Point& a, const Point& b, const Point& c,
                   const Point& d);
// ab < cd in the model sense d2(a,b) < d2(c,d).
bool seg_less(const Point& a, const Point& b, const Point& c, const Point& d);
// AC(abc,def): exact equality of angle cosines; false unless both triples
// are triangles.
bool angle_congruent(const Point& a, const Point& b, const Point& c,
                     const Point& d, const Point& e, const Point& f);
// SO/OO: orientation of coplanar angles. SO demands both triples be
// triangles and d,e,f coplanar with a,b,c.
bool same_orientation(const Point& a, const Point& b, const Point& c,
                      const Point& d, const Point& e, const Point& f);
bool opposite_orientation(const Point& a, const Point& b, const Point& c,
                          const Point& d, const Point& e, const Point& f);
// Int(d,abc)
bool interior(const Point& d, const Point& a, const Point& b, const Point& c);
// side of line ab for the pair c,d
Side side_of_line(const Point& c, const Point& d, const Point& a,
                  const Point& b);
bool same_side(const Point& c, const Point& d, const Point& a, const Point& b);
bool opposite_side(const Point& c, const Point& d, const Point& a,
                   const Point& b);

struct DegenerateAngle : std::domain_error {
  DegenerateAngle() : std::domain_error("angle arguments are not a triangle") {}
};
// abc < def via the transported angle; throws DegenerateAngle unless both
// triples are triangles.
bool angle_less(const Point& a, const Point& b, const Point& c, const Point& d,
                const Point& e, const Point& f);

bool right_angle(const Point& a, const Point& b, const Point& c);
// dba / dbc supplementary at b, per B(a,b,c) and T(a,c,d)
bool supplementary(const Point& a, const Point& b, const Point& c,
                   const Point& d);
// acd vertical to bce, per B(a,c,b), B(d,c,e), T(a,c,d)
bool vertical_pair(const Point& a, const Point& b, const Point& c,
                   const Point& d, const Point& e);
PairClass angle_pair_class(std::span<const Point> pts);

// PL_abc(d)
bool coplanar(const Point& a, const Point& b, const Point& c, const Point& d);
Side side_of_plane(const Point& x, const Point& y, const Point& a,
                   const Point& b, const Point& c);
bool same_side_plane(const Point& x, const Point& y, const Point& a,
                     const Point& b, const Point& c);
bool opposite_side_plane(const Point& x, const Point& y, const Point& a,
                         const Point& b, const Point& c);

// ab parallel cd, evaluated literally through doub/mid.
bool parallel(const Point& a, const Point& b, const Point& c, const Point& d);

enum class PgramMode { FlatAllowed, NonFlat, Convex };
bool parallelogram(const Point& a, const Point& b, const Point& c,
                   const Point& d, PgramMode mode);

// ----------------------------------------------------------------------
// Relation catalogue shared by the script evaluator, the conformance
// harness, and report serialization.

enum class Rel {
  B, L, Lt, T, SD, C, AC, SO, OO, SS, OS, Int, PL, SSP, OSP,
  Par, SegLt, AngLt, Right, Pgram, PgramN, CQuad, Suppl, Vert,
};

struct RelInfo {
  Rel kind;
  const char* name;
  int arity;
  // Suppl/Vert are relations of the system but not part of the script
  // grammar's REL set.
  bool in_script = true;
};
const std::vector<RelInfo>& relation_table();
const RelInfo* relation_by_name(const std::string& name);
const RelInfo& relation_info(Rel kind);

// Evaluate a relation on `info.arity` points. angle_less degeneracy
// propagates as DegenerateAngle.
bool eval_relation(Rel kind, std::span<const Point> args);

// A named relation applied to ordered points, with its verdict.
struct RelationQuery {
  Rel kind;
  std::vector<Point> args;  // length == arity of kind
  bool verdict = false;
};
RelationQuery make_query(Rel kind, std::vector<Point> args);

}  // namespace geo
