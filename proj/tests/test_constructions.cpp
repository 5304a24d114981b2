#include "doctest.h"
#include "geo/constructions.hpp"
#include "geo/relations.hpp"
#include "oracles.hpp"

using namespace geo;

namespace {
Point P(long x, long y, long z = 0) { return {Real(x), Real(y), Real(z)}; }
Point Pq(mpq_class x, mpq_class y) { return {Real(x), Real(y), Real(0)}; }
}  // namespace

TEST_CASE("ext") {
  Point r = ext(P(0, 0), P(1, 0), P(0, 0), P(1, 1));
  CHECK(r.x.equals(Real(1) + Real(2).sqrt()));
  CHECK(r.y.sign() == 0);
  CHECK(same_point(ext(P(0, 0), P(1, 0), P(4, 4), P(4, 4)), P(1, 0)));
  CHECK_THROWS_AS(ext(P(2, 2), P(2, 2), P(0, 0), P(1, 0)), ConstructionError);
}

TEST_CASE("doub, lf, mid") {
  CHECK(same_point(doub(P(0, 0), P(1, 2)), P(2, 4)));
  CHECK(same_point(doub(P(3, 3), P(3, 3)), P(3, 3)));
  CHECK(same_point(mid(P(0, 0), P(2, 0)), P(1, 0)));
  CHECK(same_point(mid(P(5, -1), P(5, -1)), P(5, -1)));
  CHECK(same_point(mid(P(1, 7), doub(P(1, 7), P(4, 2))), P(4, 2)));

  // lay off length 2 from a towards b
  Point l = lf(P(0, 0), P(3, 0), P(10, 0), P(12, 0));
  CHECK(same_point(l, P(2, 0)));
  CHECK(same_point(lf(P(0, 0), P(3, 0), P(9, 9), P(9, 9)), P(0, 0)));
  CHECK(same_point(lf(P(0, 0), P(3, 0), P(0, 0), P(3, 0)), P(3, 0)));
  CHECK_THROWS_AS(lf(P(1, 1), P(1, 1), P(0, 0), P(1, 0)), ConstructionError);
}

TEST_CASE("ats and ato") {
  Point a = P(5, 0), b = P(0, 0), c = P(0, 1);
  Point d = P(3, 0), e = P(2, 0), f = P(2, 5);
  Point t = ats(a, b, c, d, e, f);
  CHECK(same_point(t, P(2, 1)));
  CHECK(same_point(ats(a, b, c, a, b, c), c));
  CHECK(same_point(ato(a, b, c, d, e, f), P(2, -1)));
  CHECK_THROWS_AS(ats(P(0, 0), P(1, 0), P(2, 0), d, e, f), ConstructionError);
  // f on the line de is outside the theory
  CHECK_THROWS_AS(ats(a, b, c, d, e, P(7, 0)), ConstructionError);

  // transported point lands on f's side, mirror point opposite (sampled)
  for (long k = 1; k <= 8; ++k) {
    Point src_a = P(4 + k, 1), src_b = P(1, 1), src_c = P(2, 3 + k);
    Point base_d = P(-k, -2), base_e = P(3, -1), base_f = P(1, 2 + k);
    if (!triangle(src_a, src_b, src_c) || !triangle(base_d, base_e, base_f))
      continue;
    Point x = ats(src_a, src_b, src_c, base_d, base_e, base_f);
    Point y = ato(src_a, src_b, src_c, base_d, base_e, base_f);
    CHECK(same_side(x, base_f, base_d, base_e));
    CHECK(opposite_side(y, base_f, base_d, base_e));
    CHECK(colinear_loose(base_d, base_e, mid(x, y)));
  }
}

TEST_CASE("crossbow") {
  Point x = crossbow(P(0, 2), P(-1, 1), P(0, 0), P(1, 1));
  CHECK(same_point(x, P(0, 1)));
  // same-side points are outside the construction's domain
  CHECK_THROWS_AS(crossbow(P(0, 2), P(-1, 1), P(0, 0), P(-2, 3)),
                  ConstructionError);
}

TEST_CASE("cci and the second point") {
  Point c1 = P(0, 0), a = P(1, 0), b = P(-1, 0), c2 = P(1, 0), d = P(1, 1);
  Point m = cci(c1, a, b, c2, d);
  CHECK(m.x.equals(Real(mpq_class(1, 2))));
  CHECK(m.y.equals(Real(3).sqrt() / Real(2)));
  CHECK(m.z.sign() == 0);
  CHECK(seg_congruent(c1, m, c1, a));
  CHECK(seg_congruent(c2, m, c2, d));

  Point m2 = cci_second(c1, a, b, c2, d);
  CHECK(m2.y.equals(-(Real(3).sqrt() / Real(2))));
  CHECK(seg_congruent(c1, m2, c1, a));
  CHECK(seg_congruent(c2, m2, c2, d));
  CHECK_FALSE(same_point(m, m2));

  // a outside the second circle: undefined
  CHECK_THROWS_AS(cci(P(0, 0), P(1, 0), P(-1, 0), P(5, 0), P(5, 1)),
                  ConstructionError);
}

TEST_CASE("ortho") {
  Point o = ortho(P(1, 0), P(0, 0), P(0, 1));
  CHECK(same_point(o, P(0, 0, 1)));
  Point oc = ortho(P(2, 0), P(0, 0), P(5, 0));  // colinear fallback
  CHECK(right_angle(P(2, 0), P(0, 0), oc));
  CHECK(right_angle(P(5, 0), P(0, 0), oc));
  CHECK_FALSE(coplanar(base_alpha(), base_beta(), base_gamma(),
                       ortho(base_alpha(), base_beta(), base_gamma())));
  CHECK_THROWS_AS(ortho(P(0, 0), P(0, 0), P(1, 1)), ConstructionError);
}

TEST_CASE("drop perp") {
  Point p = drop_perp(P(0, 0), P(4, 0), P(1, 2));
  CHECK(same_point(p, P(1, 0)));
  // right angle already at a: the foot is a
  Point q = drop_perp(P(0, 0), P(4, 0), P(0, 3));
  CHECK(same_point(q, P(0, 0)));
  // matches the analytic projection on a sample
  for (long k = 1; k <= 10; ++k) {
    Point a = P(-k, 1), b = P(k, 2), c = P(1, 3 + k);
    if (!triangle(a, b, c)) continue;
    CHECK(same_point(drop_perp(a, b, c), oracle::projection(a, b, c)));
  }
  CHECK_THROWS_AS(drop_perp(P(0, 0), P(1, 0), P(2, 0)), ConstructionError);
}

TEST_CASE("canonical right angle and erected perpendiculars") {
  auto rr = right_ref();
  CHECK(right_angle(rr[0], rr[1], rr[2]));

  Point e = erect_perp(P(1, 0), P(0, 0), P(3, 0), P(0, 5));
  CHECK(e.x.equals(Real(1)));
  CHECK(e.y.sign() > 0);
  CHECK(right_angle(P(0, 0), P(1, 0), e));
  CHECK_THROWS_AS(erect_perp(P(1, 1), P(0, 0), P(3, 0), P(0, 5)),
                  ConstructionError);

  Point apex = isosceles_apex(P(0, 0), P(2, 0));
  CHECK(seg_congruent(P(0, 0), apex, P(2, 0), apex));
  CHECK(triangle(P(0, 0), apex, P(2, 0)));

  Point pb = perp_bisector(P(0, 0), P(2, 0), P(1, 5));
  CHECK(right_angle(P(0, 0), mid(P(0, 0), P(2, 0)), pb));
}

TEST_CASE("angle bisector") {
  Point m = angle_bisector(P(2, 0), P(0, 0), P(0, 1));
  CHECK(colinear_loose(P(0, 0), m, P(1, 1)));
  CHECK(angle_congruent(P(2, 0), P(0, 0), m, m, P(0, 0), P(0, 1)));
  CHECK_THROWS_AS(angle_bisector(P(0, 0), P(1, 0), P(2, 0)),
                  ConstructionError);
}

TEST_CASE("trisection") {
  auto [c, d] = trisect(P(0, 0), P(3, 3));
  CHECK(same_point(c, P(1, 1)));
  CHECK(same_point(d, P(2, 2)));
  CHECK(seg_congruent(P(0, 0), c, c, d));
  CHECK(seg_congruent(c, d, d, P(3, 3)));
  CHECK(between(P(0, 0), c, d));
  CHECK(between(c, d, P(3, 3)));
  CHECK_THROWS_AS(trisect(P(1, 1), P(1, 1)), ConstructionError);

  // thirds oracle on other segments, including ones through the base points
  for (long k = 1; k <= 6; ++k) {
    Point a = P(-k, k), b = P(2 * k, 1 - k);
    auto [x, y] = trisect(a, b);
    CHECK(same_point(x, oracle::affine_combo(a, b, mpq_class(1, 3))));
    CHECK(same_point(y, oracle::affine_combo(a, b, mpq_class(2, 3))));
  }
}

TEST_CASE("line-circle continuity") {
  Point c = P(0, 0), d = P(1, 0);
  Point a = Pq(0, mpq_class(1, 2)), b = Pq(1, mpq_class(1, 2));
  auto [x, y] = line_circle(c, d, a, b);
  Real s32 = Real(3).sqrt() / Real(2);
  CHECK(x.x.equals(s32));
  CHECK(x.y.equals(Real(mpq_class(1, 2))));
  CHECK(y.x.equals(-s32));
  CHECK(colinear_loose(a, b, x));
  CHECK(colinear_loose(a, b, y));
  CHECK_FALSE(same_point(x, y));

  // center on the line
  auto [u, w] = line_circle(P(0, 0), P(0, 2), P(-1, 0), P(5, 0));
  CHECK(same_point(u, P(2, 0)));
  CHECK(same_point(w, P(-2, 0)));

  CHECK_THROWS_AS(line_circle(P(0, 0), P(1, 0), P(5, 5), P(6, 5)),
                  ConstructionError);
}

TEST_CASE("segment-circle continuity") {
  Point z = segment_circle(P(0, 0), P(1, 0), P(0, 0), P(3, 0));
  CHECK(same_point(z, P(1, 0)));
  Point z2 = segment_circle(P(0, 1), P(0, 3), Pq(mpq_class(1, 2), 0), P(9, 0));
  CHECK(between(Pq(mpq_class(1, 2), 0), z2, P(9, 0)));
  CHECK(seg_congruent(P(0, 1), z2, P(0, 1), P(0, 3)));
  CHECK_THROWS_AS(segment_circle(P(0, 0), P(1, 0), P(5, 0), P(6, 0)),
                  ConstructionError);
}

TEST_CASE("plane meet") {
  Point x = P(2, 0);
  Point p = plane_meet(P(0, 0), P(1, 0), P(0, 1), P(0, 0), P(1, 0),
                       P(0, 0, 1), x);
  CHECK(p.y.sign() == 0);
  CHECK(p.z.sign() == 0);
  CHECK_FALSE(same_point(p, x));
  CHECK(colinear_loose(x, P(0, 0), p));

  // identical planes: any second point of the shared plane
  Point q = plane_meet(P(0, 0), P(1, 0), P(0, 1), P(2, 0), P(0, 3), P(1, 1),
                       P(1, 2));
  CHECK(coplanar(P(0, 0), P(1, 0), P(0, 1), q));
  CHECK_FALSE(same_point(q, P(1, 2)));

  CHECK_THROWS_AS(plane_meet(P(0, 0), P(1, 0), P(0, 1), P(0, 0), P(1, 0),
                             P(0, 0, 1), P(2, 0, 5)),
                  ConstructionError);
}

TEST_CASE("construction catalogue") {
  CHECK(construction_table().size() == 20);
  CHECK(construction_by_name("planemeet")->arity == 7);
  CHECK(construction_by_name("nope") == nullptr);
  Point args[] = {P(0, 0), P(3, 3)};
  Point t1 = apply_construction("trisect1", std::span<const Point>(args, 2));
  CHECK(same_point(t1, P(1, 1)));
}
