#pragma once

#include <string>

#include "geo/real.hpp"

namespace geo {

// The only geometric object: a point with exact constructible coordinates.
// Planar work keeps z = 0 but every relation is defined in space.
struct Point {
  Real x, y, z;

  Point() = default;
  Point(Real px, Real py, Real pz = Real(0))
      : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}
};

inline bool same_point(const Point& a, const Point& b) {
  return a.x.equals(b.x) && a.y.equals(b.y) && a.z.equals(b.z);
}

inline Point operator-(const Point& a, const Point& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Point operator+(const Point& a, const Point& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Point operator*(const Real& s, const Point& v) {
  return {s * v.x, s * v.y, s * v.z};
}

inline Real dot(const Point& u, const Point& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}
inline Point cross(const Point& u, const Point& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
          u.x * v.y - u.y * v.x};
}
inline Real dist2(const Point& a, const Point& b) {
  Point d = a - b;
  return dot(d, d);
}
inline Real det3(const Point& u, const Point& v, const Point& w) {
  return dot(u, cross(v, w));
}
inline bool is_zero_vec(const Point& v) {
  return v.x.sign() == 0 && v.y.sign() == 0 && v.z.sign() == 0;
}

// Distinguished non-colinear constants. Any non-degenerate choice works;
// this one keeps arithmetic small.
inline const Point& base_alpha() {
  static const Point p{Real(0), Real(0), Real(0)};
  return p;
}
inline const Point& base_beta() {
  static const Point p{Real(1), Real(0), Real(0)};
  return p;
}
inline const Point& base_gamma() {
  static const Point p{Real(0), Real(1), Real(0)};
  return p;
}

inline std::string point_string(const Point& p) {
  return "(" + p.x.expr_string() + ", " + p.y.expr_string() + ", " +
         p.z.expr_string() + ")";
}
inline std::string point_decimal(const Point& p) {
  return "(" + p.x.decimal_string() + ", " + p.y.decimal_string() + ", " +
         p.z.decimal_string() + ")";
}

}  // namespace geo
