#include "gen.hpp"

namespace geo::conf {

mpq_class Gen::q(long lo, long hi, long den_max) {
  long den = rng.integer(1, den_max);
  long num = rng.integer(lo * den, hi * den);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

mpq_class Gen::q_nonzero(long bound) {
  for (;;) {
    mpq_class v = q(-bound, bound);
    if (v != 0) return v;
  }
}

mpq_class Gen::q_pos(long hi) {
  long den = rng.integer(1, 6);
  long num = rng.integer(1, hi * den);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

mpq_class Gen::q_open01() {
  long den = rng.integer(2, 24);
  long num = rng.integer(1, den - 1);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

Real Gen::ob(const mpq_class& x) {
  if (!rng.chance(12)) return Real(x);
  // value-preserving radical wrapper: (x * sqrt(k)) / sqrt(k)
  static const long ks[] = {2, 3, 5};
  Real k(ks[rng.integer(0, 2)]);
  Real s = k.sqrt();
  return (Real(x) * s) / s;
}

std::pair<mpq_class, mpq_class> Gen::rot_pair(bool allow_identity) {
  struct Pair {
    long c_n, s_n, den;
  };
  static const Pair pairs[] = {
      {1, 0, 1},   {0, 1, 1},    {-1, 0, 1},  {0, -1, 1},
      {3, 4, 5},   {4, 3, 5},    {-3, 4, 5},  {4, -3, 5},
      {5, 12, 13}, {12, 5, 13},  {-5, 12, 13},
      {8, 15, 17}, {15, 8, 17},  {20, 21, 29},
  };
  for (;;) {
    const Pair& p = pairs[rng.integer(0, 13)];
    if (!allow_identity && p.s_n == 0) continue;
    return {mpq_class(p.c_n, p.den), mpq_class(p.s_n, p.den)};
  }
}

Frame Gen::frame(bool allow_tilt) {
  Point o{Real(q_small()), Real(q_small()),
          Real(rng.chance(50) ? mpq_class(0) : q_small())};
  mpq_class s = q_pos(4);
  if (!allow_tilt || rng.chance(50)) {
    return {o, Point{Real(s), Real(0), Real(0)},
            Point{Real(0), Real(s), Real(0)}};
  }
  auto [c1, s1] = rot_pair(true);
  auto [c2, s2] = rot_pair(true);
  // columns of Rz(c1,s1) * Rx(c2,s2), scaled by s
  Point u{Real(s * c1), Real(s * s1), Real(0)};
  Point v{Real(s * (-s1 * c2)), Real(s * (c1 * c2)), Real(s * s2)};
  return {o, u, v};
}

Frame Gen::plane_at(const Point& origin, bool allow_tilt) {
  Frame f = frame(allow_tilt);
  f.o = origin;
  return f;
}

Point Gen::map(const Frame& f, const P2& p) {
  return f.at(ob(p.x), ob(p.y));
}

Point Gen::free_point(const Frame& f) {
  Point p = map(f, p2());
  if (!rng.chance(25)) return p;
  // push through one or two constructions to populate radical coordinates
  int steps = rng.integer(1, 2);
  for (int i = 0; i < steps; ++i) {
    Point a = map(f, p2());
    switch (rng.integer(0, 3)) {
      case 0: p = mid(p, a); break;
      case 1: p = doub(a, p); break;
      case 2: {
        Point c = map(f, p2()), d = map(f, p2());
        if (!same_point(a, p)) p = ext(a, p, c, d);
        break;
      }
      default: {
        Point c = map(f, p2()), d = map(f, p2());
        if (!same_point(p, a)) p = lf(p, a, c, d);
        break;
      }
    }
  }
  return p;
}

Point Gen::space_point() {
  return Point{ob(q_small()), ob(q_small()), ob(q_small())};
}

std::optional<std::array<P2, 3>> Gen::tri2(int orient, long bound) {
  for (int tries = 0; tries < 12; ++tries) {
    P2 a = p2(bound), b = p2(bound), c = p2(bound);
    mpq_class cr = cross2(a, b, c);
    if (cr == 0) continue;
    if (orient != 0 && sgn(cr) != orient) std::swap(b, c);
    return std::array<P2, 3>{a, b, c};
  }
  return std::nullopt;
}

Point Gen::Motion::apply(const Point& p) const {
  return Point{m[0] * p.x + m[1] * p.y + m[2] * p.z + t.x,
               m[3] * p.x + m[4] * p.y + m[5] * p.z + t.y,
               m[6] * p.x + m[7] * p.y + m[8] * p.z + t.z};
}

Gen::Motion Gen::motion(bool allow_reflection) {
  auto [c1, s1] = rot_pair(true);
  auto [c2, s2] = rot_pair(true);
  // Rz(c1,s1) * Rx(c2,s2): exact rational orthogonal matrix
  mpq_class m[9] = {c1, -s1 * c2, s1 * s2,  s1, c1 * c2, -c1 * s2,
                    0,  s2,       c2};
  if (allow_reflection && rng.chance(50)) {
    for (int i = 0; i < 9; i += 3) m[i + 2] = -m[i + 2];
  }
  Motion mo;
  for (int i = 0; i < 9; ++i) mo.m[i] = Real(m[i]);
  mo.t = Point{Real(q_small()), Real(q_small()), Real(q_small())};
  return mo;
}

}  // namespace geo::conf
