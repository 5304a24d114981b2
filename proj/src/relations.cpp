#include "geo/relations.hpp"

#include <cassert>
#include <map>

namespace geo {

bool between(const Point& a, const Point& b, const Point& c) {
  // cross = 0 forces colinearity, dot < 0 forces b strictly interior and
  // with it all the distinctness the axioms demand.
  return is_zero_vec(cross(b - a, c - a)) && dot(a - b, c - b).sign() < 0;
}

bool colinear(const Point& a, const Point& b, const Point& c) {
  return between(a, b, c) || between(a, c, b) || between(b, a, c);
}

bool colinear_loose(const Point& a, const Point& b, const Point& c) {
  return colinear(a, b, c) || same_point(a, b) || same_point(b, c) ||
         same_point(a, c);
}

bool triangle(const Point& a, const Point& b, const Point& c) {
  return !same_point(a, b) && !same_point(b, c) && !same_point(a, c) &&
         !colinear(a, b, c);
}

bool same_direction(const Point& a, const Point& b, const Point& c) {
  if (between(a, b, c) || between(a, c, b)) return true;
  bool ab = same_point(a, b), cb = same_point(c, b);
  return (!ab && cb) || (ab && !cb);
}

bool seg_congruent(const Point& a, const Point& b, const Point& c,
                   const Point& d) {
  return dist2(a, b).equals(dist2(c, d));
}

bool seg_less(const Point& a, const Point& b, const Point& c, const Point& d) {
  return dist2(a, b) < dist2(c, d);
}

bool angle_congruent(const Point& a, const Point& b, const Point& c,
                     const Point& d, const Point& e, const Point& f) {
  if (!triangle(a, b, c) || !triangle(d, e, f)) return false;
  Real u1 = dot(a - b, c - b);
  Real u2 = dot(d - e, f - e);
  if (u1.sign() != u2.sign()) return false;
  // cos^2 equality without radicals, cross-multiplied
  Real lhs = u1 * u1 * dist2(d, e) * dist2(f, e);
  Real rhs = u2 * u2 * dist2(a, b) * dist2(c, b);
  return lhs.equals(rhs);
}

bool same_orientation(const Point& a, const Point& b, const Point& c,
                      const Point& d, const Point& e, const Point& f) {
  if (!triangle(a, b, c) || !triangle(d, e, f)) return false;
  if (!coplanar(a, b, c, d) || !coplanar(a, b, c, e) || !coplanar(a, b, c, f))
    return false;
  return dot(cross(a - b, c - b), cross(d - e, f - e)).sign() > 0;
}

bool opposite_orientation(const Point& a, const Point& b, const Point& c,
                          const Point& d, const Point& e, const Point& f) {
  if (!triangle(a, b, c) || !triangle(d, e, f)) return false;
  if (!coplanar(a, b, c, d) || !coplanar(a, b, c, e) || !coplanar(a, b, c, f))
    return false;
  // coplanar triangles have parallel nonzero normals, so not-SO is dot < 0
  return dot(cross(a - b, c - b), cross(d - e, f - e)).sign() < 0;
}

bool interior(const Point& d, const Point& a, const Point& b, const Point& c) {
  return same_orientation(c, b, d, c, b, a) &&
         same_orientation(a, b, d, a, b, c);
}

Side side_of_line(const Point& c, const Point& d, const Point& a,
                  const Point& b) {
  if (same_orientation(a, b, c, a, b, d)) return Side::Same;
  if (opposite_orientation(a, b, c, a, b, d)) return Side::Opposite;
  return Side::Neither;
}

bool same_side(const Point& c, const Point& d, const Point& a,
               const Point& b) {
  return side_of_line(c, d, a, b) == Side::Same;
}

bool opposite_side(const Point& c, const Point& d, const Point& a,
                   const Point& b) {
  return side_of_line(c, d, a, b) == Side::Opposite;
}

bool right_angle(const Point& a, const Point& b, const Point& c) {
  return triangle(a, b, c) && dot(a - b, c - b).sign() == 0;
}

bool supplementary(const Point& a, const Point& b, const Point& c,
                   const Point& d) {
  return between(a, b, c) && triangle(a, c, d);
}

bool vertical_pair(const Point& a, const Point& b, const Point& c,
                   const Point& d, const Point& e) {
  return between(a, c, b) && between(d, c, e) && triangle(a, c, d);
}

PairClass angle_pair_class(std::span<const Point> pts) {
  if (pts.size() == 4 && supplementary(pts[0], pts[1], pts[2], pts[3]))
    return PairClass::Supplementary;
  if (pts.size() == 5 && vertical_pair(pts[0], pts[1], pts[2], pts[3], pts[4]))
    return PairClass::Vertical;
  return PairClass::Neither;
}

bool coplanar(const Point& a, const Point& b, const Point& c, const Point& d) {
  return triangle(a, b, c) && det3(b - a, c - a, d - a).sign() == 0;
}

Side side_of_plane(const Point& x, const Point& y, const Point& a,
                   const Point& b, const Point& c) {
  if (!triangle(a, b, c)) return Side::Neither;
  if (coplanar(a, b, c, x) || coplanar(a, b, c, y)) return Side::Neither;
  Point n = cross(b - a, c - a);
  int sx = dot(n, x - a).sign();
  int sy = dot(n, y - a).sign();
  if (triangle(x, b, y) && sx * sy < 0) return Side::Opposite;
  return Side::Same;
}

bool same_side_plane(const Point& x, const Point& y, const Point& a,
                     const Point& b, const Point& c) {
  return side_of_plane(x, y, a, b, c) == Side::Same;
}

bool opposite_side_plane(const Point& x, const Point& y, const Point& a,
                         const Point& b, const Point& c) {
  return side_of_plane(x, y, a, b, c) == Side::Opposite;
}

// ----------------------------------------------------------------------

const std::vector<RelInfo>& relation_table() {
  static const std::vector<RelInfo> table = {
      {Rel::B, "B", 3},         {Rel::L, "L", 3},
      {Rel::Lt, "Lt", 3},       {Rel::T, "T", 3},
      {Rel::SD, "SD", 3},       {Rel::C, "C", 4},
      {Rel::AC, "AC", 6},       {Rel::SO, "SO", 6},
      {Rel::OO, "OO", 6},       {Rel::SS, "SS", 4},
      {Rel::OS, "OS", 4},       {Rel::Int, "Int", 4},
      {Rel::PL, "PL", 4},       {Rel::SSP, "SSP", 5},
      {Rel::OSP, "OSP", 5},     {Rel::Par, "Par", 4},
      {Rel::SegLt, "SegLt", 4}, {Rel::AngLt, "AngLt", 6},
      {Rel::Right, "Right", 3}, {Rel::Pgram, "Pgram", 4},
      {Rel::PgramN, "PgramN", 4}, {Rel::CQuad, "CQuad", 4},
      {Rel::Suppl, "Suppl", 4, false}, {Rel::Vert, "Vert", 5, false},
  };
  return table;
}

const RelInfo* relation_by_name(const std::string& name) {
  for (const auto& r : relation_table())
    if (name == r.name) return &r;
  return nullptr;
}

const RelInfo& relation_info(Rel kind) {
  for (const auto& r : relation_table())
    if (r.kind == kind) return r;
  assert(false);
  return relation_table().front();
}

bool eval_relation(Rel kind, std::span<const Point> p) {
  assert(static_cast<int>(p.size()) == relation_info(kind).arity);
  switch (kind) {
    case Rel::B: return between(p[0], p[1], p[2]);
    case Rel::L: return colinear(p[0], p[1], p[2]);
    case Rel::Lt: return colinear_loose(p[0], p[1], p[2]);
    case Rel::T: return triangle(p[0], p[1], p[2]);
    case Rel::SD: return same_direction(p[0], p[1], p[2]);
    case Rel::C: return seg_congruent(p[0], p[1], p[2], p[3]);
    case Rel::AC: return angle_congruent(p[0], p[1], p[2], p[3], p[4], p[5]);
    case Rel::SO: return same_orientation(p[0], p[1], p[2], p[3], p[4], p[5]);
    case Rel::OO:
      return opposite_orientation(p[0], p[1], p[2], p[3], p[4], p[5]);
    case Rel::SS: return same_side(p[0], p[1], p[2], p[3]);
    case Rel::OS: return opposite_side(p[0], p[1], p[2], p[3]);
    case Rel::Int: return interior(p[0], p[1], p[2], p[3]);
    case Rel::PL: return coplanar(p[0], p[1], p[2], p[3]);
    case Rel::SSP: return same_side_plane(p[0], p[1], p[2], p[3], p[4]);
    case Rel::OSP: return opposite_side_plane(p[0], p[1], p[2], p[3], p[4]);
    case Rel::Par: return parallel(p[0], p[1], p[2], p[3]);
    case Rel::SegLt: return seg_less(p[0], p[1], p[2], p[3]);
    case Rel::AngLt: return angle_less(p[0], p[1], p[2], p[3], p[4], p[5]);
    case Rel::Right: return right_angle(p[0], p[1], p[2]);
    case Rel::Pgram:
      return parallelogram(p[0], p[1], p[2], p[3], PgramMode::FlatAllowed);
    case Rel::PgramN:
      return parallelogram(p[0], p[1], p[2], p[3], PgramMode::NonFlat);
    case Rel::CQuad:
      return parallelogram(p[0], p[1], p[2], p[3], PgramMode::Convex);
    case Rel::Suppl: return supplementary(p[0], p[1], p[2], p[3]);
    case Rel::Vert: return vertical_pair(p[0], p[1], p[2], p[3], p[4]);
  }
  return false;
}

RelationQuery make_query(Rel kind, std::vector<Point> args) {
  assert(static_cast<int>(args.size()) == relation_info(kind).arity);
  RelationQuery q{kind, std::move(args), false};
  q.verdict = eval_relation(q.kind, q.args);
  return q;
}

}  // namespace geo
