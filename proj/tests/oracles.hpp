#pragma once

// Test-side oracles, independent of the implementation paths they check.

#include <gmpxx.h>

#include "geo/point.hpp"

namespace oracle {

// Enclosure of sqrt(v) by integer bisection on squares: returns [lo, hi]
// with hi - lo = 2^-bits and lo^2 <= v <= hi^2. Uses only mpz/mpq.
inline std::pair<mpq_class, mpq_class> bisect_sqrt(const mpq_class& v,
                                                   unsigned bits) {
  mpq_class lo = 0, hi = v < 1 ? mpq_class(1) : v;
  for (unsigned i = 0; i < bits + 64; ++i) {
    if (hi - lo <= mpq_class(1) / mpq_class(mpz_class(1) << bits)) break;
    mpq_class m = (lo + hi) / 2;
    if (m * m <= v)
      lo = m;
    else
      hi = m;
  }
  return {lo, hi};
}

// Exact comparison of cos(angle abc) and cos(angle def): returns -1/0/+1.
// Smaller angle in [0,pi) means larger cosine.
inline int cos_compare(const geo::Point& a, const geo::Point& b,
                       const geo::Point& c, const geo::Point& d,
                       const geo::Point& e, const geo::Point& f) {
  using geo::Real;
  Real u1 = dot(a - b, c - b);
  Real u2 = dot(d - e, f - e);
  int s1 = u1.sign(), s2 = u2.sign();
  if (s1 != s2) return s1 > s2 ? 1 : -1;
  // same sign: compare u1^2/(p1 q1) against u2^2/(p2 q2), oriented by sign
  Real lhs = u1 * u1 * dist2(d, e) * dist2(f, e);
  Real rhs = u2 * u2 * dist2(a, b) * dist2(c, b);
  int cmp = (lhs - rhs).sign();
  if (s1 < 0) cmp = -cmp;  // negative cosines: larger square = smaller cos
  return cmp;
}

// angle abc < angle def, decided purely by exact cosine comparison
inline bool angle_less_by_cos(const geo::Point& a, const geo::Point& b,
                              const geo::Point& c, const geo::Point& d,
                              const geo::Point& e, const geo::Point& f) {
  return cos_compare(a, b, c, d, e, f) > 0;
}

// analytic foot of the perpendicular from c onto line ab
inline geo::Point projection(const geo::Point& a, const geo::Point& b,
                             const geo::Point& c) {
  return a + (dot(c - a, b - a) / dist2(a, b)) * (b - a);
}

inline geo::Point affine_combo(const geo::Point& a, const geo::Point& b,
                               const mpq_class& t) {
  return a + geo::Real(t) * (b - a);
}

}  // namespace oracle
