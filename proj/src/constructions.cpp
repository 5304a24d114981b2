#include "geo/constructions.hpp"

#include <cassert>

#include "geo/relations.hpp"

namespace geo {

namespace {

using CE = ConstructionError;
using Reason = ConstructionError::Reason;

[[noreturn]] void fail(const char* name, Reason r,
                       std::initializer_list<Point> w) {
  throw CE(name, r, std::vector<Point>(w));
}

const Real& half() {
  static const Real h{mpq_class(1, 2)};
  return h;
}

// component of w perpendicular to v (v nonzero)
Point perp_component(const Point& w, const Point& v) {
  return w - (dot(w, v) / dot(v, v)) * v;
}

// coordinate axis least aligned with v
Point least_aligned_axis(const Point& v) {
  Real ax = v.x * v.x, ay = v.y * v.y, az = v.z * v.z;
  if (ax <= ay && ax <= az) return {Real(1), Real(0), Real(0)};
  if (ay <= az) return {Real(0), Real(1), Real(0)};
  return {Real(0), Real(0), Real(1)};
}

bool all_coplanar(std::span<const Point> pts) {
  // rank of the difference vectors is at most 2
  const Point& o = pts[0];
  for (size_t i = 1; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      for (size_t k = j + 1; k < pts.size(); ++k)
        if (det3(pts[i] - o, pts[j] - o, pts[k] - o).sign() != 0) return false;
  return true;
}

}  // namespace

Point ext(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (same_point(a, b)) fail("ext", Reason::UndefinedOutsideDomain, {a, b, c, d});
  Real t = (dist2(c, d) / dist2(a, b)).sqrt();
  return b + t * (b - a);
}

Point doub(const Point& a, const Point& b) { return b + (b - a); }

Point lf(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (same_point(a, b)) fail("lf", Reason::UndefinedOutsideDomain, {a, b, c, d});
  return ext(doub(b, a), a, c, d);
}

Point mid(const Point& a, const Point& b) { return half() * (a + b); }

Point ats(const Point& a, const Point& b, const Point& c, const Point& d,
          const Point& e, const Point& f) {
  if (!triangle(a, b, c) || !triangle(d, e, f))
    fail("ats", Reason::UndefinedOutsideDomain, {a, b, c, d, e, f});
  Point u = d - e;
  Point w0 = perp_component(f - e, u);
  Real d2de = dot(u, u);
  Real d2ab = dist2(a, b), d2cb = dist2(c, b);
  Real dot1 = dot(a - b, c - b);
  // target = e + |bc| (cos u^ + sin w^); both coefficients folded into one
  // radical each to keep towers shallow
  Real coef1 = dot1 / (d2ab * d2de).sqrt();
  Real num2 = d2ab * d2cb - dot1 * dot1;  // > 0 by T(a,b,c)
  Real coef2 = (num2 / (d2ab * dot(w0, w0))).sqrt();
  return e + coef1 * u + coef2 * w0;
}

Point ato(const Point& a, const Point& b, const Point& c, const Point& d,
          const Point& e, const Point& f) {
  if (!triangle(a, b, c) || !triangle(d, e, f))
    fail("ato", Reason::UndefinedOutsideDomain, {a, b, c, d, e, f});
  return ats(a, b, c, d, e, doub(f, e));
}

Point crossbow(const Point& d, const Point& a, const Point& b,
               const Point& c) {
  if (!opposite_orientation(d, b, a, d, b, c))
    fail("cb", Reason::UndefinedOutsideDomain, {d, a, b, c});
  // a + t(c-a) on the line through b and d; exact linear solve in-plane
  Point ca = c - a, db = d - b;
  Point n = cross(ca, db);
  Real t = -(dot(cross(a - b, db), n)) / dot(n, n);
  return a + t * ca;
}

namespace {

struct CciParts {
  Real alpha, h2;
  Point u, wperp;
};

CciParts cci_parts(const char* name, const Point& c1, const Point& a,
                   const Point& b, const Point& c2, const Point& d) {
  if (!seg_congruent(c1, a, c1, b) || !seg_less(c2, a, c2, d) ||
      !seg_less(c2, d, c2, b))
    fail(name, Reason::UndefinedOutsideDomain, {c1, a, b, c2, d});
  const Point pts[5] = {c1, a, b, c2, d};
  if (!all_coplanar(pts))
    fail(name, Reason::UndefinedOutsideDomain, {c1, a, b, c2, d});
  Point u = c2 - c1;
  Real D2 = dot(u, u);
  if (D2.sign() == 0)
    fail(name, Reason::UndefinedOutsideDomain, {c1, a, b, c2, d});
  Real r1sq = dist2(c1, a), r2sq = dist2(c2, d);
  Real alpha = (D2 + r1sq - r2sq) / (Real(2) * D2);
  Real h2 = r1sq - alpha * alpha * D2;
  if (h2.sign() <= 0)
    fail(name, Reason::UndefinedOutsideDomain, {c1, a, b, c2, d});
  // frame: first usable of a-c1, d-c2, b-c1, then an axis fallback
  for (const Point& cand : {a - c1, d - c2, b - c1}) {
    Point w = perp_component(cand, u);
    if (!is_zero_vec(w)) return {alpha, h2, u, w};
  }
  Point w = perp_component(least_aligned_axis(u), u);
  return {alpha, h2, u, w};
}

}  // namespace

Point cci(const Point& c1, const Point& a, const Point& b, const Point& c2,
          const Point& d) {
  CciParts p = cci_parts("cci", c1, a, b, c2, d);
  Real coef = (p.h2 / dot(p.wperp, p.wperp)).sqrt();
  return c1 + p.alpha * p.u + coef * p.wperp;
}

Point cci_second(const Point& c1, const Point& a, const Point& b,
                 const Point& c2, const Point& d) {
  Point y = cci(c1, a, b, c2, d);
  if (!triangle(c1, c2, y))
    fail("cci2", Reason::UndefinedOutsideDomain, {c1, a, b, c2, d});
  Point p = drop_perp(c1, c2, y);
  return doub(y, p);
}

Point ortho(const Point& a, const Point& b, const Point& c) {
  if (same_point(a, b) || same_point(c, b))
    fail("ortho", Reason::DegenerateInput, {a, b, c});
  Point n = cross(a - b, c - b);
  if (!is_zero_vec(n)) return b + (dist2(a, b) / dot(n, n)).sqrt() * n;
  // colinear inputs: any direction orthogonal to ab satisfies the axiom;
  // take the least-aligned axis projection for determinism
  Point abv = a - b;
  Point w = perp_component(least_aligned_axis(abv), abv);
  return b + (dist2(a, b) / dot(w, w)).sqrt() * w;
}

Point drop_perp(const Point& a, const Point& b, const Point& c) {
  if (!triangle(a, b, c))
    fail("dropperp", Reason::UndefinedOutsideDomain, {a, b, c});
  Point c2 = ato(a, b, c, a, b, c);  // c reflected over line ab
  return crossbow(b, c, a, c2);
}

std::array<Point, 3> right_ref() {
  static const std::array<Point, 3> r = [] {
    Point c = lf(base_beta(), base_gamma(), base_alpha(), base_beta());
    Point d = mid(base_alpha(), c);
    return std::array<Point, 3>{base_alpha(), d, base_beta()};
  }();
  return r;
}

Point erect_perp(const Point& p, const Point& a, const Point& b,
                 const Point& f) {
  if (same_point(a, b) || !colinear_loose(a, b, p) || !triangle(a, b, f))
    fail("erectperp", Reason::DegenerateInput, {p, a, b, f});
  const Point& base = same_point(p, a) ? b : a;
  auto r = right_ref();
  return ats(r[0], r[1], r[2], base, p, f);
}

Point perp_bisector(const Point& a, const Point& b, const Point& f) {
  if (same_point(a, b) || !triangle(a, b, f))
    fail("perpbisector", Reason::DegenerateInput, {a, b, f});
  return erect_perp(mid(a, b), a, b, f);
}

Point isosceles_apex(const Point& a, const Point& b) {
  if (same_point(a, b)) fail("apex", Reason::DegenerateInput, {a, b});
  for (const Point& s : {base_alpha(), base_beta(), base_gamma()})
    if (triangle(a, b, s)) return perp_bisector(a, b, s);
  assert(false && "base triple degenerate");
  return a;
}

Point angle_bisector(const Point& a, const Point& b, const Point& c) {
  if (!triangle(a, b, c)) fail("bisect", Reason::DegenerateInput, {a, b, c});
  Point astar = lf(b, a, b, c);  // congruent legs
  return mid(astar, c);
}

std::pair<Point, Point> trisect(const Point& a, const Point& b) {
  if (same_point(a, b)) fail("trisect", Reason::DegenerateInput, {a, b});
  Point g = base_alpha();
  for (const Point& s : {base_alpha(), base_beta(), base_gamma()})
    if (triangle(a, b, s)) {
      g = s;
      break;
    }
  Point g1 = doub(a, g);
  Point g2 = doub(g, g1);
  Point x = doub(g2, mid(g1, b));
  Point d = crossbow(x, a, g1, b);
  Point y = doub(g1, mid(g, d));
  Point c = crossbow(y, a, g, d);
  return {c, d};
}

namespace {

struct LineCircle {
  Point x, y, p;
};

LineCircle line_circle_impl(const char* name, const Point& c, const Point& d,
                            const Point& a, const Point& b) {
  if (same_point(a, b) || same_point(c, d) || !seg_less(c, a, c, d))
    fail(name, Reason::UndefinedOutsideDomain, {c, d, a, b});
  if (colinear_loose(a, b, c)) {
    // center on the line: lay the radius off both ways
    Point u = b - a;
    Real s = (dist2(c, d) / dist2(a, b)).sqrt();
    return {c + s * u, c - s * u, c};
  }
  Point p = drop_perp(a, b, c);
  Point cp = doub(c, p);
  Point e = ext(c, cp, c, d);
  Point g = ext(e, cp, c, d);
  // in-plane radius witness off the axis c-cp, so the intersection's working
  // plane is pinned
  const Point& w =
      is_zero_vec(cross(a - c, cp - c)) ? b : a;
  Point dd = lf(c, w, c, d);
  Point x = cci(cp, g, e, c, dd);
  Point y = doub(x, p);
  return {x, y, p};
}

}  // namespace

std::pair<Point, Point> line_circle(const Point& c, const Point& d,
                                    const Point& a, const Point& b) {
  LineCircle r = line_circle_impl("lci", c, d, a, b);
  return {r.x, r.y};
}

Point segment_circle(const Point& c, const Point& d, const Point& a,
                     const Point& b) {
  if (!seg_less(c, a, c, d) || !seg_less(c, d, c, b) || same_point(a, b))
    fail("sci", Reason::UndefinedOutsideDomain, {c, d, a, b});
  LineCircle r = line_circle_impl("sci", c, d, a, b);
  // the layoff lands on the intersection nearest a's side of the foot;
  // when the segment crosses on the far side, mirror across the foot
  Point z = same_point(r.p, a) ? lf(a, b, a, r.x) : lf(r.p, a, r.p, r.x);
  if (!between(a, z, b)) z = doub(z, r.p);
  return z;
}

namespace {

// In-plane auxiliary triangle (x,u,v) spanning the plane of (p1,p2,p3):
// u by segment extension along p2p1, v by a circle-circle intersection.
std::pair<Point, Point> plane_aux(const Point& p1, const Point& p2,
                                  const Point& p3, const Point& x) {
  Point w0 = perp_component(p3 - p2, p1 - p2);
  Point y = p2 + w0;  // right angle (p1, p2, y) inside the plane
  Point u = ext(p2, p1, x, y);
  if (same_point(u, x))
    fail("planemeet", Reason::UndefinedOutsideDomain, {p1, p2, p3, x});
  const Point* w = nullptr;
  for (const Point* cand : {&p1, &p2, &p3})
    if (triangle(x, u, *cand)) {
      w = cand;
      break;
    }
  assert(w && "plane spanned by p1,p2,p3");
  Point xu = u - x;
  Point w1 = perp_component(*w - x, xu);
  Point bb = x + (dot(xu, xu) / dot(w1, w1)).sqrt() * w1;
  Point v = cci(x, u, bb, u, x);
  return {u, v};
}

}  // namespace

Point plane_meet(const Point& a, const Point& b, const Point& c,
                 const Point& d, const Point& e, const Point& f,
                 const Point& x) {
  if (!coplanar(a, b, c, x) || !coplanar(d, e, f, x))
    fail("planemeet", Reason::UndefinedOutsideDomain, {a, b, c, d, e, f, x});
  auto [u1, v1] = plane_aux(a, b, c, x);
  auto [u2, v2] = plane_aux(d, e, f, x);
  Point o1 = ortho(u1, x, v1);
  Point o2 = ortho(u2, x, v2);
  return ortho(o1, x, o2);
}

// --- definition-level relations that lean on constructions ---------------

bool parallel(const Point& a, const Point& b, const Point& c, const Point& d) {
  return triangle(a, b, c) && !same_point(c, d) &&
         colinear_loose(c, doub(b, mid(a, c)), d);
}

bool angle_less(const Point& a, const Point& b, const Point& c, const Point& d,
                const Point& e, const Point& f) {
  if (!triangle(a, b, c) || !triangle(d, e, f)) throw DegenerateAngle();
  Point t = ats(a, b, c, d, e, f);
  return interior(t, d, e, f);
}

bool parallelogram(const Point& a, const Point& b, const Point& c,
                   const Point& d, PgramMode mode) {
  switch (mode) {
    case PgramMode::FlatAllowed:
      return same_point(mid(a, c), mid(b, d));
    case PgramMode::NonFlat:
      return same_point(mid(a, c), mid(b, d)) && triangle(a, b, c);
    case PgramMode::Convex:
      return interior(d, a, b, c) && interior(a, b, c, d);
  }
  return false;
}

// --- script-facing catalogue ---------------------------------------------

const std::vector<FuncInfo>& construction_table() {
  static const std::vector<FuncInfo> table = {
      {"ext", 4},      {"doub", 2},     {"lf", 4},       {"mid", 2},
      {"ats", 6},      {"ato", 6},      {"cb", 4},       {"cci", 5},
      {"cci2", 5},     {"ortho", 3},    {"dropperp", 3}, {"erectperp", 4},
      {"bisect", 3},   {"apex", 2},     {"trisect1", 2}, {"trisect2", 2},
      {"lci1", 4},     {"lci2", 4},     {"sci", 4},      {"planemeet", 7},
  };
  return table;
}

const FuncInfo* construction_by_name(const std::string& name) {
  for (const auto& f : construction_table())
    if (name == f.name) return &f;
  return nullptr;
}

Point apply_construction(const std::string& name,
                         std::span<const Point> p) {
  const FuncInfo* info = construction_by_name(name);
  assert(info && static_cast<int>(p.size()) == info->arity);
  (void)info;
  if (name == "ext") return ext(p[0], p[1], p[2], p[3]);
  if (name == "doub") return doub(p[0], p[1]);
  if (name == "lf") return lf(p[0], p[1], p[2], p[3]);
  if (name == "mid") return mid(p[0], p[1]);
  if (name == "ats") return ats(p[0], p[1], p[2], p[3], p[4], p[5]);
  if (name == "ato") return ato(p[0], p[1], p[2], p[3], p[4], p[5]);
  if (name == "cb") return crossbow(p[0], p[1], p[2], p[3]);
  if (name == "cci") return cci(p[0], p[1], p[2], p[3], p[4]);
  if (name == "cci2") return cci_second(p[0], p[1], p[2], p[3], p[4]);
  if (name == "ortho") return ortho(p[0], p[1], p[2]);
  if (name == "dropperp") return drop_perp(p[0], p[1], p[2]);
  if (name == "erectperp") return erect_perp(p[0], p[1], p[2], p[3]);
  if (name == "bisect") return angle_bisector(p[0], p[1], p[2]);
  if (name == "apex") return isosceles_apex(p[0], p[1]);
  if (name == "trisect1") return trisect(p[0], p[1]).first;
  if (name == "trisect2") return trisect(p[0], p[1]).second;
  if (name == "lci1") return line_circle(p[0], p[1], p[2], p[3]).first;
  if (name == "lci2") return line_circle(p[0], p[1], p[2], p[3]).second;
  if (name == "sci") return segment_circle(p[0], p[1], p[2], p[3]);
  if (name == "planemeet")
    return plane_meet(p[0], p[1], p[2], p[3], p[4], p[5], p[6]);
  assert(false && "unknown construction");
  return p[0];
}

}  // namespace geo
