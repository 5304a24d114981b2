#pragma once

#include <array>
#include <optional>
#include <utility>

#include "geo/conformance.hpp"
#include "geo/constructions.hpp"

namespace geo::conf {

// Exact 2D scratch coordinates used to force premises before mapping into
// space through a frame.
struct P2 {
  mpq_class x, y;
};

inline mpq_class cross2(const P2& a, const P2& b, const P2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}
inline mpq_class dot2(const P2& o, const P2& p, const P2& q) {
  return (p.x - o.x) * (q.x - o.x) + (p.y - o.y) * (q.y - o.y);
}
inline mpq_class d2q(const P2& a, const P2& b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

// A plane in space with orthogonal, equal-length, rational axes. Frame
// coordinates preserve betweenness, orientation, angles, and congruence
// ratios exactly, so premises forced in 2D survive the embedding.
struct Frame {
  Point o, u, v;

  Point at(const Real& s, const Real& t) const {
    return o + s * u + t * v;
  }
  Point at(const P2& p) const { return at(Real(p.x), Real(p.y)); }
};

class Gen {
 public:
  explicit Gen(Rng& r) : rng(r) {}

  Rng& rng;

  mpq_class q(long lo, long hi, long den_max = 6);
  mpq_class q_small() { return q(-12, 12); }
  mpq_class q_nonzero(long bound = 12);
  mpq_class q_pos(long hi = 8);     // strictly positive
  mpq_class q_open01();             // in (0,1)
  // rational value wrapped, sometimes, in a value-preserving radical
  // expression so exact machinery gets exercised on radical coordinates
  Real ob(const mpq_class& x);

  P2 p2(long bound = 12) { return {q(-bound, bound), q(-bound, bound)}; }

  std::pair<mpq_class, mpq_class> rot_pair(bool allow_identity);

  Frame frame(bool allow_tilt = true);
  // frame with the given origin (random orientation)
  Frame plane_at(const Point& origin, bool allow_tilt = true);

  Point map(const Frame& f, const P2& p);
  Point at(const Frame& f) { return map(f, p2()); }
  // free in-plane point, sometimes produced by construction closure
  Point free_point(const Frame& f);
  // random point in space
  Point space_point();

  // triangle in 2D scratch coordinates; orient > 0 forces positive cross,
  // orient < 0 negative
  std::optional<std::array<P2, 3>> tri2(int orient = 0, long bound = 12);

  struct Motion {
    std::array<Real, 9> m;
    Point t;
    Point apply(const Point& p) const;
  };
  Motion motion(bool allow_reflection);
};

}  // namespace geo::conf
