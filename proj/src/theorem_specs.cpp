#include "gen.hpp"

// Theorem checks: the paper's principal results verified as universally
// quantified implications over premise-directed instances. Solid-geometry
// specs carry the THM-solid- prefix so suite filters can select them.

namespace geo::conf {

namespace {

using Pts = std::vector<Point>;
using OptPts = std::optional<Pts>;

template <typename F>
std::optional<Point> try_pt(F&& f) {
  try {
    return f();
  } catch (const ConstructionError&) {
    return std::nullopt;
  }
}

CheckSpec mk(std::string id, std::string stmt, std::string note, int n,
             std::function<OptPts(Rng&)> gen,
             std::function<Outcome(std::span<const Point>, const RelEval&)> chk) {
  CheckSpec s;
  s.id = std::move(id);
  s.statement = std::move(stmt);
  s.note = std::move(note);
  s.default_n = n;
  s.generate = std::move(gen);
  s.check = std::move(chk);
  return s;
}

std::optional<std::array<Point, 3>> tri_in(Gen& g, const Frame& F,
                                           int orient = 0) {
  auto t = g.tri2(orient);
  if (!t) return std::nullopt;
  return std::array<Point, 3>{g.map(F, (*t)[0]), g.map(F, (*t)[1]),
                              g.map(F, (*t)[2])};
}

// colinear points at given parameters along a 2D line
P2 along(const P2& base, const P2& dir, const mpq_class& t) {
  return {base.x + t * dir.x, base.y + t * dir.y};
}

// point off the 2D line through a,b (retrying)
std::optional<P2> off_line2(Gen& g, const P2& a, const P2& b) {
  for (int i = 0; i < 12; ++i) {
    P2 c = g.p2();
    if (cross2(a, b, c) != 0) return c;
  }
  return std::nullopt;
}

bool distinct4(std::span<const Point> p) {
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (same_point(p[i], p[j])) return false;
  return true;
}

// parallel segment to ab starting at c, via the defining doubled midpoint
std::optional<Point> parallel_mate(Gen& g, const Point& a, const Point& b,
                                   const Point& c, bool both_signs) {
  Point x0 = doub(b, mid(a, c));
  mpq_class t = both_signs ? g.q_nonzero(3) : g.q_pos(3);
  Point d = c + Real(t) * (x0 - c);
  if (same_point(d, c)) return std::nullopt;
  return d;
}

Point normal_of(const Frame& F) { return cross(F.u, F.v); }

}  // namespace

const std::vector<CheckSpec>& theorem_specs() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> v;

    // ---- Pasch analog and crossbar -------------------------------------

    v.push_back(mk(
        "THM-pasch", "A -> (P and R) or (Q and S)",
        "R and S quantify over a free point; each instance samples two "
        "points per segment",
        250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = g.tri2();
          if (!t) return std::nullopt;
          P2 a = (*t)[0], b = (*t)[1], c = (*t)[2];
          mpq_class td = g.q_open01();
          P2 d = along(a, {b.x - a.x, b.y - a.y}, td);
          P2 e = g.p2();
          if (cross2(a, b, e) == 0 || cross2(e, d, c) == 0)
            return std::nullopt;
          if ((e.x == d.x && e.y == d.y) || (e.x == c.x && e.y == c.y))
            return std::nullopt;
          Pts out{g.map(F, a), g.map(F, b), g.map(F, c), g.map(F, d),
                  g.map(F, e)};
          P2 bc{c.x - b.x, c.y - b.y}, ac{c.x - a.x, c.y - a.y};
          out.push_back(g.map(F, along(b, bc, g.q_open01())));
          out.push_back(g.map(F, along(b, bc, g.q_open01())));
          out.push_back(g.map(F, along(a, ac, g.q_open01())));
          out.push_back(g.map(F, along(a, ac, g.q_open01())));
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4];
          bool A = R.holds(Rel::T, {a, b, c}) && R.holds(Rel::B, {a, d, b}) &&
                   R.holds(Rel::T, {a, b, e}) && R.holds(Rel::T, {e, d, c});
          if (!A) return Outcome{false, true};
          auto cb1 = try_pt([&] { return crossbow(e, a, d, c); });
          auto cb2 = try_pt([&] { return crossbow(e, b, d, c); });
          bool P = cb1 && R.holds(Rel::Lt, {d, *cb1, e}) &&
                   R.holds(Rel::B, {a, *cb1, c});
          bool Q = cb2 && R.holds(Rel::Lt, {d, *cb2, e}) &&
                   R.holds(Rel::B, {b, *cb2, c});
          auto no_hit = [&](const Point& x, const Point& s0,
                            const Point& s1) {
            return !R.holds(Rel::B, {s0, x, s1}) ||
                   !R.holds(Rel::Lt, {e, d, x});
          };
          bool Rc = no_hit(p[5], b, c) && no_hit(p[6], b, c);
          bool Sc = no_hit(p[7], a, c) && no_hit(p[8], a, c);
          return Outcome{true, (P && Rc) || (Q && Sc)};
        }));

    v.push_back(mk(
        "THM-crossbar", "Int(d,abc) -> SD(b, cb(d,abc), d)", "", 500,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = g.tri2();
          if (!t) return std::nullopt;
          P2 a = (*t)[0], b = (*t)[1], c = (*t)[2];
          mpq_class la = g.q_pos(4), mu = g.q_pos(4);
          P2 d{b.x + la * (a.x - b.x) + mu * (c.x - b.x),
               b.y + la * (a.y - b.y) + mu * (c.y - b.y)};
          return Pts{g.map(F, d), g.map(F, a), g.map(F, b), g.map(F, c)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &d = p[0], &a = p[1], &b = p[2], &c = p[3];
          bool prem = R.holds(Rel::Int, {d, a, b, c});
          if (!prem) return Outcome{false, true};
          auto x = try_pt([&] { return crossbow(d, a, b, c); });
          return Outcome{true, x && R.holds(Rel::SD, {b, *x, d})};
        }));

    // ---- line separation -----------------------------------------------

    auto gen_line4 = [](Rng& r) -> OptPts {
      Gen g(r);
      Frame F = g.frame();
      P2 a = g.p2();
      P2 dir{g.q_nonzero(), g.q_nonzero()};
      mpq_class tb = g.q_nonzero(4), tc = g.q_nonzero(4), td = g.q_nonzero(4);
      if (g.rng.chance(15)) tc = tb;
      if (g.rng.chance(15)) td = tc;
      return Pts{g.map(F, a), g.map(F, along(a, dir, tb)),
                 g.map(F, along(a, dir, tc)), g.map(F, along(a, dir, td))};
    };

    v.push_back(mk(
        "THM-line-separation-1", "a != b -> SD(a,b,b)", "", 400, gen_line4,
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = !same_point(p[0], p[1]);
          return Outcome{prem, !prem || R.holds(Rel::SD, {p[0], p[1], p[1]})};
        }));
    v.push_back(mk(
        "THM-line-separation-2", "SD(a,b,c) -> SD(a,c,b)", "", 400, gen_line4,
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::SD, {p[0], p[1], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::SD, {p[0], p[2], p[1]})};
        }));
    v.push_back(mk(
        "THM-line-separation-3", "SD(a,b,c) and SD(a,c,d) -> SD(a,b,d)", "",
        400, gen_line4,
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::SD, {p[0], p[1], p[2]}) &&
                      R.holds(Rel::SD, {p[0], p[2], p[3]});
          return Outcome{prem, !prem || R.holds(Rel::SD, {p[0], p[1], p[3]})};
        }));
    v.push_back(mk(
        "THM-line-separation-4", "SD(a,b,c) and B(d,a,c) -> B(d,a,b)", "",
        400, gen_line4,
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::SD, {p[0], p[1], p[2]}) &&
                      R.holds(Rel::B, {p[3], p[0], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::B, {p[3], p[0], p[1]})};
        }));
    v.push_back(mk(
        "THM-line-separation-5", "B(b,a,c) and B(d,a,c) -> SD(a,b,d)", "",
        400, gen_line4,
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::B, {p[1], p[0], p[2]}) &&
                      R.holds(Rel::B, {p[3], p[0], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::SD, {p[0], p[1], p[3]})};
        }));

    // ---- sides of a line -----------------------------------------------

    auto gen_sides = [](Rng& r) -> OptPts {
      Gen g(r);
      Frame F = g.frame();
      P2 a = g.p2(), b = g.p2();
      if (a.x == b.x && a.y == b.y) return std::nullopt;
      P2 dir{b.x - a.x, b.y - a.y}, n{-dir.y, dir.x};
      auto side_pt = [&](int sign) {
        mpq_class s = g.q(-3, 3), h = g.q_pos(4);
        return P2{a.x + s * dir.x + sign * h * n.x,
                  a.y + s * dir.y + sign * h * n.y};
      };
      int s1 = g.rng.chance(75) ? 1 : -1;
      int s2 = g.rng.chance(75) ? s1 : -s1;
      int s3 = g.rng.chance(75) ? s1 : -s1;
      return Pts{g.map(F, a),         g.map(F, b),        g.map(F, side_pt(s1)),
                 g.map(F, side_pt(s2)), g.map(F, side_pt(s3))};
    };

    v.push_back(mk(
        "THM-ss-props",
        "SS is reflexive on triangles, symmetric, endpoint-stable and "
        "transitive",
        "the printed transitivity premise SS(c,d,ad) is read as SS(c,d,ab)",
        400, gen_sides,
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4];
          bool refl = !R.holds(Rel::T, {a, b, c}) ||
                      R.holds(Rel::SS, {c, c, a, b});
          bool ssym = !R.holds(Rel::SS, {c, d, a, b}) ||
                      (R.holds(Rel::SS, {d, c, a, b}) &&
                       R.holds(Rel::SS, {c, d, b, a}));
          bool trans = !(R.holds(Rel::SS, {c, d, a, b}) &&
                         R.holds(Rel::SS, {d, e, a, b})) ||
                       R.holds(Rel::SS, {c, e, a, b});
          return Outcome{true, refl && ssym && trans};
        }));

    v.push_back(mk(
        "THM-os-props",
        "OS is symmetric, endpoint-stable; OS(c,d,ab) and OS(d,e,ab) -> "
        "SS(c,e,ab)",
        "the printed premise OS(c,d,ad) is read as OS(c,d,ab)", 400,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a = g.p2(), b = g.p2();
          if (a.x == b.x && a.y == b.y) return std::nullopt;
          P2 dir{b.x - a.x, b.y - a.y}, n{-dir.y, dir.x};
          auto side_pt = [&](int sign) {
            mpq_class s = g.q(-3, 3), h = g.q_pos(4);
            return P2{a.x + s * dir.x + sign * h * n.x,
                      a.y + s * dir.y + sign * h * n.y};
          };
          return Pts{g.map(F, a), g.map(F, b), g.map(F, side_pt(1)),
                     g.map(F, side_pt(-1)), g.map(F, side_pt(1))};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4];
          bool prem = R.holds(Rel::OS, {c, d, a, b});
          if (!prem) return Outcome{false, true};
          bool sym = R.holds(Rel::OS, {d, c, a, b}) &&
                     R.holds(Rel::OS, {c, d, b, a});
          bool mix = !R.holds(Rel::OS, {d, e, a, b}) ||
                     R.holds(Rel::SS, {c, e, a, b});
          return Outcome{true, sym && mix};
        }));

    auto gen_rebase = [](Rng& r, bool opposite) -> OptPts {
      Gen g(r);
      Frame F = g.frame();
      P2 base = g.p2();
      P2 dir{g.q_nonzero(), g.q_nonzero()};
      mpq_class ta = 0, tb = g.q_nonzero(4);
      mpq_class tc, td;
      // allow the coincidence cases of the rebase theorem
      switch (g.rng.integer(0, 3)) {
        case 0: tc = ta; td = tb; break;
        case 1: tc = tb; td = g.q(-4, 4); break;
        case 2: tc = g.q(-4, 4); td = ta; break;
        default: tc = g.q(-4, 4); td = g.q(-4, 4); break;
      }
      if (tc == td) return std::nullopt;
      P2 n{-dir.y, dir.x};
      auto side_pt = [&](int sign) {
        mpq_class s = g.q(-3, 3), h = g.q_pos(4);
        return P2{base.x + s * dir.x + sign * h * n.x,
                  base.y + s * dir.y + sign * h * n.y};
      };
      int s1 = g.rng.chance(50) ? 1 : -1;
      int s2 = opposite ? -s1 : s1;
      return Pts{g.map(F, along(base, dir, ta)), g.map(F, along(base, dir, tb)),
                 g.map(F, along(base, dir, tc)), g.map(F, along(base, dir, td)),
                 g.map(F, side_pt(s1)), g.map(F, side_pt(s2))};
    };

    v.push_back(mk(
        "THM-ss-rebase",
        "a != b, c != d, Lt(a,b,c), Lt(b,c,d), SS(e,f,ab) -> SS(e,f,cd)", "",
        400, [gen_rebase](Rng& r) { return gen_rebase(r, false); },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5];
          bool prem = !same_point(a, b) && !same_point(c, d) &&
                      R.holds(Rel::Lt, {a, b, c}) &&
                      R.holds(Rel::Lt, {b, c, d}) &&
                      R.holds(Rel::SS, {e, f, a, b});
          return Outcome{prem, !prem || R.holds(Rel::SS, {e, f, c, d})};
        }));

    v.push_back(mk(
        "THM-os-rebase",
        "a != b, c != d, Lt(a,b,c), Lt(b,c,d), OS(e,f,ab) -> OS(e,f,cd)", "",
        400, [gen_rebase](Rng& r) { return gen_rebase(r, true); },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5];
          bool prem = !same_point(a, b) && !same_point(c, d) &&
                      R.holds(Rel::Lt, {a, b, c}) &&
                      R.holds(Rel::Lt, {b, c, d}) &&
                      R.holds(Rel::OS, {e, f, a, b});
          return Outcome{prem, !prem || R.holds(Rel::OS, {e, f, c, d})};
        }));

    // ---- alternate interior angles and parallels ------------------------

    v.push_back(mk(
        "THM-aiat", "cab ~ acd and OS(b,d,ac) -> ab || cd", "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a2 = g.p2(), c2 = g.p2();
          if (a2.x == c2.x && a2.y == c2.y) return std::nullopt;
          auto b2 = off_line2(g, a2, c2);
          if (!b2) return std::nullopt;
          Point a = g.map(F, a2), c = g.map(F, c2), b = g.map(F, *b2);
          auto x = try_pt([&] { return ato(c, a, b, a, c, b); });
          if (!x) return std::nullopt;
          Point d = c + Real(g.q_pos(3)) * (*x - c);
          return Pts{a, b, c, d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::AC, {c, a, b, a, c, d}) &&
                      R.holds(Rel::OS, {b, d, a, c});
          return Outcome{prem, !prem || R.holds(Rel::Par, {a, b, c, d})};
        }));

    v.push_back(mk(
        "THM-aiat-converse", "ab || cd and OS(b,d,ac) -> cab ~ acd", "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          auto d = parallel_mate(g, (*t)[0], (*t)[1], (*t)[2], true);
          if (!d) return std::nullopt;
          return Pts{(*t)[0], (*t)[1], (*t)[2], *d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::Par, {a, b, c, d}) &&
                      R.holds(Rel::OS, {b, d, a, c});
          return Outcome{prem, !prem || R.holds(Rel::AC, {c, a, b, a, c, d})};
        }));

    v.push_back(mk(
        "THM-par-props",
        "ab || cd implies distinctness, cd || ab, and ba || cd", "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          Point d = g.at(F);
          if (g.rng.chance(70)) {
            auto m = parallel_mate(g, (*t)[0], (*t)[1], (*t)[2], true);
            if (!m) return std::nullopt;
            d = *m;
          }
          return Pts{(*t)[0], (*t)[1], (*t)[2], d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::Par, {p[0], p[1], p[2], p[3]});
          if (!prem) return Outcome{false, true};
          bool concl = distinct4(p) &&
                       R.holds(Rel::Par, {p[2], p[3], p[0], p[1]}) &&
                       R.holds(Rel::Par, {p[1], p[0], p[2], p[3]});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-par-pseudo-transitive",
        "ab || pq, ab || rs, T(p,q,r) -> pq || rs", "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a2 = g.p2(), b2 = g.p2();
          if (a2.x == b2.x && a2.y == b2.y) return std::nullopt;
          auto p2a = off_line2(g, a2, b2);
          auto r2a = off_line2(g, a2, b2);
          if (!p2a || !r2a) return std::nullopt;
          Point a = g.map(F, a2), b = g.map(F, b2);
          Point pp = g.map(F, *p2a), rr = g.map(F, *r2a);
          auto q = parallel_mate(g, a, b, pp, true);
          auto s = parallel_mate(g, a, b, rr, true);
          if (!q || !s) return std::nullopt;
          return Pts{a, b, pp, *q, rr, *s};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::Par, {p[0], p[1], p[2], p[3]}) &&
                      R.holds(Rel::Par, {p[0], p[1], p[4], p[5]}) &&
                      R.holds(Rel::T, {p[2], p[3], p[4]});
          return Outcome{prem, !prem || R.holds(Rel::Par, {p[2], p[3], p[4],
                                                           p[5]})};
        }));

    v.push_back(mk(
        "THM-par-extend",
        "parallels survive extending or truncating either segment",
        "x = c and y = a are excluded; the parallel relation itself requires "
        "distinct endpoints",
        300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          auto d = parallel_mate(g, (*t)[0], (*t)[1], (*t)[2], true);
          if (!d) return std::nullopt;
          const Point &a = (*t)[0], &b = (*t)[1], &c = (*t)[2];
          Point x = c + Real(g.q_nonzero(3)) * (*d - c);
          Point y = a + Real(g.q_nonzero(3)) * (b - a);
          return Pts{a, b, c, *d, x, y};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &x = p[4],
                      &y = p[5];
          bool prem = R.holds(Rel::Par, {a, b, c, d});
          if (!prem) return Outcome{false, true};
          bool part1 = !R.holds(Rel::Lt, {c, d, x}) ||
                       R.holds(Rel::Par, {a, b, c, x});
          bool part2 = !R.holds(Rel::Lt, {a, b, y}) ||
                       R.holds(Rel::Par, {a, y, c, d});
          return Outcome{true, part1 && part2};
        }));

    v.push_back(mk(
        "THM-parallel-coplanar", "ab || cd -> PL_abc(d)", "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          auto d = parallel_mate(g, (*t)[0], (*t)[1], (*t)[2], true);
          if (!d) return std::nullopt;
          return Pts{(*t)[0], (*t)[1], (*t)[2], *d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::Par, {p[0], p[1], p[2], p[3]});
          return Outcome{prem, !prem || R.holds(Rel::PL, {p[0], p[1], p[2],
                                                          p[3]})};
        }));

    v.push_back(mk(
        "THM-equidistance",
        "ab || cd iff SS(a,b,cd) and the dropped perpendiculars are "
        "congruent",
        "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 c2 = g.p2(), d2 = g.p2();
          if (c2.x == d2.x && c2.y == d2.y) return std::nullopt;
          P2 dir{d2.x - c2.x, d2.y - c2.y}, n{-dir.y, dir.x};
          mpq_class h1 = g.q_pos(4);
          mpq_class h2 = g.rng.chance(50) ? h1 : g.q_pos(4);
          int sgn2 = g.rng.chance(80) ? 1 : -1;
          mpq_class s1 = g.q(-3, 3), s2 = g.q(-3, 3);
          P2 a2{c2.x + s1 * dir.x + h1 * n.x, c2.y + s1 * dir.y + h1 * n.y};
          P2 b2{c2.x + s2 * dir.x + sgn2 * h2 * n.x,
                c2.y + s2 * dir.y + sgn2 * h2 * n.y};
          if (a2.x == b2.x && a2.y == b2.y) return std::nullopt;
          return Pts{g.map(F, a2), g.map(F, b2), g.map(F, c2), g.map(F, d2)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::T, {b, c, d}) && R.holds(Rel::T, {a, c, d});
          if (!prem) return Outcome{false, true};
          auto x = try_pt([&] { return drop_perp(c, d, a); });
          auto y = try_pt([&] { return drop_perp(c, d, b); });
          if (!x || !y) return Outcome{true, false};
          bool lhs = R.holds(Rel::Par, {a, b, c, d});
          bool rhs = R.holds(Rel::SS, {a, b, c, d}) &&
                     R.holds(Rel::C, {a, *x, b, *y});
          return Outcome{true, lhs == rhs};
        }));

    v.push_back(mk(
        "THM-angle-opens",
        "T(b,a,d), B(a,b,c), bd || ce, L(a,d,e) -> bd < ce", "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a = g.p2();
          P2 u{g.q_nonzero(4), g.q_nonzero(4)};
          P2 w{g.q_nonzero(4), g.q_nonzero(4)};
          if (u.x * w.y - u.y * w.x == 0) return std::nullopt;
          mpq_class s = 1 + g.q_pos(3);  // strictly beyond b and d
          P2 b{a.x + u.x, a.y + u.y}, d{a.x + w.x, a.y + w.y};
          P2 c{a.x + s * u.x, a.y + s * u.y}, e{a.x + s * w.x, a.y + s * w.y};
          return Pts{g.map(F, a), g.map(F, b), g.map(F, c), g.map(F, d),
                     g.map(F, e)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4];
          bool prem = R.holds(Rel::T, {b, a, d}) &&
                      R.holds(Rel::B, {a, b, c}) &&
                      R.holds(Rel::Par, {b, d, c, e}) &&
                      R.holds(Rel::L, {a, d, e});
          return Outcome{prem, !prem || R.holds(Rel::SegLt, {b, d, c, e})};
        }));

    // ---- triangle-magnitude theorems ------------------------------------

    v.push_back(mk(
        "THM-exterior-angle",
        "the exterior angle at c exceeds both remote interior angles",
        "the printed conclusion lists the adjacent angle acb; the provable "
        "(Euclid I.16) form bounds the remote angles abc and bac",
        250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          return Pts{(*t)[0], (*t)[1], (*t)[2]};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2];
          bool prem = R.holds(Rel::T, {a, b, c});
          if (!prem) return Outcome{false, true};
          Point g = doub(b, c);
          bool concl = R.holds(Rel::AngLt, {a, b, c, a, c, g}) &&
                       R.holds(Rel::AngLt, {b, a, c, a, c, g});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-triangle-inequality", "T(a,b,c) -> ac < a ext(ab,bc)", "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          return Pts{(*t)[0], (*t)[1], (*t)[2]};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2];
          bool prem = R.holds(Rel::T, {a, b, c});
          if (!prem) return Outcome{false, true};
          auto x = try_pt([&] { return ext(a, b, b, c); });
          return Outcome{true, x && R.holds(Rel::SegLt, {a, c, a, *x})};
        }));

    v.push_back(mk(
        "THM-crossbow-feasibility",
        "T(a,b,c) and B(a,x,c) -> bx < ba or bx < bc", "", 400,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = g.tri2();
          if (!t) return std::nullopt;
          P2 a = (*t)[0], b = (*t)[1], c = (*t)[2];
          P2 x = along(a, {c.x - a.x, c.y - a.y}, g.q_open01());
          return Pts{g.map(F, a), g.map(F, b), g.map(F, c), g.map(F, x)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &x = p[3];
          bool prem = R.holds(Rel::T, {a, b, c}) && R.holds(Rel::B, {a, x, c});
          bool concl = !prem || R.holds(Rel::SegLt, {b, x, b, a}) ||
                       R.holds(Rel::SegLt, {b, x, b, c});
          return Outcome{prem, concl};
        }));

    v.push_back(mk(
        "THM-seg-lt-transitive", "ab < cd and cd < ef -> ab < ef", "", 400,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          mpq_class l1 = g.q_pos(6), l2 = l1 + g.q_pos(4),
                    l3 = l2 + g.q_pos(4);
          P2 p1 = g.p2(), p2_ = g.p2(), p3 = g.p2();
          return Pts{g.map(F, p1), g.map(F, {p1.x + l1, p1.y}),
                     g.map(F, p2_), g.map(F, {p2_.x + l2, p2_.y}),
                     g.map(F, p3), g.map(F, {p3.x + l3, p3.y})};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::SegLt, {p[0], p[1], p[2], p[3]}) &&
                      R.holds(Rel::SegLt, {p[2], p[3], p[4], p[5]});
          return Outcome{prem, !prem || R.holds(Rel::SegLt, {p[0], p[1], p[4],
                                                             p[5]})};
        }));

    v.push_back(mk(
        "THM-seg-lt-layoff",
        "ab < cd coincides with B(c, lf(cd,ab), d) or (a = b and c != d)",
        "", 400,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a = g.p2();
          P2 b = g.rng.chance(15) ? a : g.p2();
          P2 c = g.p2();
          P2 d = g.rng.chance(15) ? c : g.p2();
          return Pts{g.map(F, a), g.map(F, b), g.map(F, c), g.map(F, d)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool lhs = R.holds(Rel::SegLt, {a, b, c, d});
          bool rhs;
          if (same_point(c, d)) {
            rhs = false;
          } else if (same_point(a, b)) {
            rhs = true;
          } else {
            auto l = try_pt([&] { return lf(c, d, a, b); });
            rhs = l && R.holds(Rel::B, {c, *l, d});
          }
          return Outcome{true, lhs == rhs};
        }));

    v.push_back(mk(
        "THM-right-supplement",
        "Right(a,b,c) iff angle abc is congruent to its supplement", "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 b = g.p2();
          P2 a{b.x + g.q_nonzero(4), b.y};
          P2 c = g.rng.chance(50) ? P2{b.x, b.y + g.q_nonzero(4)} : g.p2();
          if (cross2(b, a, c) == 0) return std::nullopt;
          return Pts{g.map(F, a), g.map(F, b), g.map(F, c)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2];
          bool prem = R.holds(Rel::T, {a, b, c});
          if (!prem) return Outcome{false, true};
          Point a2 = doub(a, b);
          bool sup = R.holds(Rel::AC, {c, b, a, c, b, a2});
          return Outcome{true, R.holds(Rel::Right, {a, b, c}) == sup};
        }));

    v.push_back(mk(
        "THM-vertical-angles", "vertical angles are congruent", "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 c = g.p2();
          P2 w1{g.q_nonzero(4), g.q_nonzero(4)};
          P2 w2{g.q_nonzero(4), g.q_nonzero(4)};
          if (w1.x * w2.y - w1.y * w2.x == 0) return std::nullopt;
          mpq_class t = g.q_pos(3), s = g.q_pos(3);
          P2 a{c.x + w1.x, c.y + w1.y}, b{c.x - t * w1.x, c.y - t * w1.y};
          P2 d{c.x + w2.x, c.y + w2.y}, e{c.x - s * w2.x, c.y - s * w2.y};
          return Pts{g.map(F, a), g.map(F, b), g.map(F, c), g.map(F, d),
                     g.map(F, e)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4];
          bool prem = R.holds(Rel::Vert, {a, b, c, d, e});
          return Outcome{prem,
                         !prem || R.holds(Rel::AC, {a, c, d, b, c, e})};
        }));

    v.push_back(mk(
        "THM-supplements-congruent",
        "supplements of congruent angles are congruent", "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a = g.p2(), c = g.p2();
          if (a.x == c.x && a.y == c.y) return std::nullopt;
          P2 b = along(a, {c.x - a.x, c.y - a.y}, g.q_open01());
          auto d = off_line2(g, a, c);
          if (!d) return std::nullopt;
          Point A = g.map(F, a), B = g.map(F, b), C = g.map(F, c),
                D = g.map(F, *d);
          auto m = g.motion(true);
          return Pts{A, B, C, D, m.apply(A), m.apply(B), m.apply(C),
                     m.apply(D)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          const Point &a2 = p[4], &b2 = p[5], &c2 = p[6], &d2 = p[7];
          bool prem = R.holds(Rel::Suppl, {a, b, c, d}) &&
                      R.holds(Rel::Suppl, {a2, b2, c2, d2}) &&
                      R.holds(Rel::AC, {d, b, a, d2, b2, a2});
          return Outcome{prem, !prem || R.holds(Rel::AC, {d, b, c, d2, b2,
                                                          c2})};
        }));

    v.push_back(mk(
        "THM-angle-lt-transitive",
        "abc < def and def < ghi -> abc < ghi", "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          struct Dir {
            long cn, sn, den;
          };
          static const Dir dirs[] = {{4, 3, 5},   {3, 4, 5},  {5, 12, 13},
                                     {0, 1, 1},   {-5, 12, 13},
                                     {-3, 4, 5},  {-4, 3, 5}};
          long i = g.rng.integer(0, 4);
          long j = g.rng.integer(i + 1, 5);
          long k = g.rng.integer(j + 1, 6);
          P2 b = g.p2();
          mpq_class ra = g.q_pos(4);
          P2 a{b.x + ra, b.y};
          auto arm = [&](const Dir& d) {
            mpq_class s = g.q_pos(4);
            return P2{b.x + s * mpq_class(d.cn, d.den),
                      b.y + s * mpq_class(d.sn, d.den)};
          };
          return Pts{g.map(F, a), g.map(F, b), g.map(F, arm(dirs[i])),
                     g.map(F, arm(dirs[j])), g.map(F, arm(dirs[k]))};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &x = p[2], &y = p[3], &z = p[4];
          try {
            bool prem = R.holds(Rel::AngLt, {a, b, x, a, b, y}) &&
                        R.holds(Rel::AngLt, {a, b, y, a, b, z});
            return Outcome{prem,
                           !prem || R.holds(Rel::AngLt, {a, b, x, a, b, z})};
          } catch (const DegenerateAngle&) {
            return Outcome{false, true};
          }
        }));

    v.push_back(mk(
        "THM-interior-angle-lt", "Int(d,abc) -> abd < abc", "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = g.tri2();
          if (!t) return std::nullopt;
          P2 a = (*t)[0], b = (*t)[1], c = (*t)[2];
          mpq_class la = g.q_pos(4), mu = g.q_pos(4);
          P2 d{b.x + la * (a.x - b.x) + mu * (c.x - b.x),
               b.y + la * (a.y - b.y) + mu * (c.y - b.y)};
          return Pts{g.map(F, a), g.map(F, b), g.map(F, c), g.map(F, d)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::Int, {d, a, b, c});
          if (!prem) return Outcome{false, true};
          try {
            return Outcome{true, R.holds(Rel::AngLt, {a, b, d, a, b, c})};
          } catch (const DegenerateAngle&) {
            return Outcome{true, false};
          }
        }));

    v.push_back(mk(
        "THM-cong-angle-same-side-ray",
        "AC(abc,abd) and SS(c,d,ab) -> SD(b,c,d)", "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          const Point &a = (*t)[0], &b = (*t)[1], &c = (*t)[2];
          Point d = b + Real(g.q_pos(4)) * (c - b);
          return Pts{a, b, c, d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::AC, {a, b, c, a, b, d}) &&
                      R.holds(Rel::SS, {c, d, a, b});
          return Outcome{prem, !prem || R.holds(Rel::SD, {b, c, d})};
        }));

    // ---- Suppes identities, parallelograms, division --------------------

    v.push_back(mk(
        "THM-suppes-identities",
        "midpoint/doubling laws: idempotence, commutativity, injectivity, "
        "cancellation",
        "", 400,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          Point a = g.free_point(F), b = g.free_point(F);
          Point b2 = g.rng.chance(40) ? b : g.free_point(F);
          Point a2 = g.rng.chance(40) ? a : g.free_point(F);
          return Pts{a, b, a2, b2};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &a2 = p[2], &b2 = p[3];
          bool ok = same_point(mid(a, a), a) &&
                    same_point(mid(a, b), mid(b, a)) &&
                    same_point(mid(a, doub(a, b)), b) &&
                    R.holds(Rel::Lt, {a, b, mid(a, b)});
          if (same_point(mid(a, b), mid(a, b2)) && !same_point(b, b2))
            ok = false;
          if (same_point(doub(a, b), doub(b, a)) && !same_point(a, b))
            ok = false;
          if (same_point(doub(a, b), doub(a, b2)) && !same_point(b, b2))
            ok = false;
          if (same_point(doub(a, b), doub(a2, b)) && !same_point(a, a2))
            ok = false;
          return Outcome{true, ok};
        }));

    v.push_back(mk(
        "THM-pgram-fourth-point",
        "P(a,b,c,doub(b,mid(a,c))); the fourth point is unique and yields "
        "both parallels",
        "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          return Pts{(*t)[0], (*t)[1], (*t)[2]};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2];
          bool prem = R.holds(Rel::T, {a, b, c});
          if (!prem) return Outcome{false, true};
          Point d = doub(b, mid(a, c));
          Point d2 = (a + c) - b;  // independently expressed fourth point
          bool concl = R.holds(Rel::Pgram, {a, b, c, d}) &&
                       same_point(d, d2) &&
                       R.holds(Rel::Par, {a, b, c, d}) &&
                       R.holds(Rel::Par, {b, c, a, d});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-pgram-props",
        "parallelogram permutation laws and Suppes' exclusion theorem", "",
        300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          Point a = g.at(F), b = g.at(F), c = g.at(F);
          Point d = g.rng.chance(75) ? (a + c) - b : g.at(F);
          return Pts{a, b, c, d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::Pgram, {a, b, c, d});
          if (!prem) return Outcome{false, true};
          bool rot = R.holds(Rel::Pgram, {b, c, d, a}) &&
                     R.holds(Rel::Pgram, {c, d, a, b}) &&
                     R.holds(Rel::Pgram, {d, a, b, c}) &&
                     R.holds(Rel::Pgram, {c, b, a, d}) &&
                     R.holds(Rel::Pgram, {b, a, d, c}) &&
                     R.holds(Rel::Pgram, {a, d, c, b}) &&
                     R.holds(Rel::Pgram, {d, c, b, a});
          bool excl = same_point(b, c) || !R.holds(Rel::Pgram, {a, c, b, d});
          return Outcome{true, rot && excl};
        }));

    v.push_back(mk(
        "THM-pgram-transitive", "P(a,b,c,d) and P(c,d,e,f) -> P(a,b,f,e)",
        "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          Point a = g.at(F), b = g.at(F), c = g.at(F), e = g.at(F);
          Point d = (a + c) - b;
          Point f = (c + e) - d;
          return Pts{a, b, c, d, e, f};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::Pgram, {p[0], p[1], p[2], p[3]}) &&
                      R.holds(Rel::Pgram, {p[2], p[3], p[4], p[5]});
          return Outcome{prem, !prem || R.holds(Rel::Pgram, {p[0], p[1], p[5],
                                                             p[4]})};
        }));

    v.push_back(mk(
        "THM-pgram-opposite",
        "opposite sides and opposite angles of a non-flat parallelogram are "
        "congruent",
        "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          Point d = ((*t)[0] + (*t)[2]) - (*t)[1];
          return Pts{(*t)[0], (*t)[1], (*t)[2], d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::PgramN, {a, b, c, d});
          if (!prem) return Outcome{false, true};
          bool sides = R.holds(Rel::C, {a, b, d, c}) &&
                       R.holds(Rel::C, {b, c, a, d});
          bool angles = R.holds(Rel::AC, {a, b, c, c, d, a}) &&
                        R.holds(Rel::AC, {b, a, d, d, c, b});
          return Outcome{true, sides && angles};
        }));

    v.push_back(mk(
        "THM-convex-quad-interior",
        "a convex quadrilateral is convex at every vertex", "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          Point d = ((*t)[0] + (*t)[2]) - (*t)[1];
          return Pts{(*t)[0], (*t)[1], (*t)[2], d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::CQuad, {a, b, c, d});
          if (!prem) return Outcome{false, true};
          bool concl = R.holds(Rel::Int, {b, c, d, a}) &&
                       R.holds(Rel::Int, {c, d, a, b});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-convex-quad-pgram",
        "a convex quadrilateral with congruent opposite sides is a non-flat "
        "parallelogram with both parallels",
        "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          Point d = ((*t)[0] + (*t)[2]) - (*t)[1];
          return Pts{(*t)[0], (*t)[1], (*t)[2], d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::CQuad, {a, b, c, d}) &&
                      R.holds(Rel::C, {a, b, d, c}) &&
                      R.holds(Rel::C, {b, c, a, d});
          if (!prem) return Outcome{false, true};
          bool concl = R.holds(Rel::Par, {a, b, c, d}) &&
                       R.holds(Rel::Par, {b, c, a, d}) &&
                       R.holds(Rel::PgramN, {a, b, c, d});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-trisect",
        "trisect(a,b) returns the affine thirds with exact congruences and "
        "betweenness",
        "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          Point a = g.free_point(F), b = g.free_point(F);
          if (same_point(a, b)) return std::nullopt;
          return Pts{a, b};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1];
          auto cd = [&]() -> std::optional<std::pair<Point, Point>> {
            try {
              return trisect(a, b);
            } catch (const ConstructionError&) {
              return std::nullopt;
            }
          }();
          if (!cd) return Outcome{true, false};
          const Real third(mpq_class(1, 3));
          Point c1 = a + third * (b - a);
          Point d1 = a + (Real(2) * third) * (b - a);
          bool concl = same_point(cd->first, c1) &&
                       same_point(cd->second, d1) &&
                       R.holds(Rel::C, {a, cd->first, cd->first, cd->second}) &&
                       R.holds(Rel::C, {cd->first, cd->second, cd->second, b}) &&
                       R.holds(Rel::B, {a, cd->first, cd->second}) &&
                       R.holds(Rel::B, {cd->first, cd->second, b});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-mid-doub-cancel", "mid(a, doub(a,b)) = b", "", 400,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          return Pts{g.free_point(F), g.free_point(F)};
        },
        [](std::span<const Point> p, const RelEval&) {
          return Outcome{true, same_point(mid(p[0], doub(p[0], p[1])), p[1])};
        }));

    v.push_back(mk(
        "THM-drop-perp",
        "the dropped perpendicular lands on the line, makes a right angle, "
        "and equals the analytic projection",
        "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          return Pts{(*t)[0], (*t)[1], (*t)[2]};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2];
          bool prem = R.holds(Rel::T, {a, b, c});
          if (!prem) return Outcome{false, true};
          auto f = try_pt([&] { return drop_perp(a, b, c); });
          if (!f) return Outcome{true, false};
          Point proj = a + (dot(c - a, b - a) / dist2(a, b)) * (b - a);
          bool right = same_point(*f, a) ? R.holds(Rel::Right, {b, *f, c})
                                         : R.holds(Rel::Right, {a, *f, c}) ||
                                               R.holds(Rel::Right, {b, *f, c});
          bool concl =
              R.holds(Rel::Lt, {a, *f, b}) && right && same_point(*f, proj);
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-ato-opposite",
        "ato lands opposite the side witness; ats and ato are mirror images",
        "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F1 = g.frame(), F2 = g.frame();
          auto t1 = tri_in(g, F1);
          auto t2 = tri_in(g, F2);
          if (!t1 || !t2) return std::nullopt;
          Pts out(t1->begin(), t1->end());
          out.insert(out.end(), t2->begin(), t2->end());
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5];
          bool prem = R.holds(Rel::T, {a, b, c}) && R.holds(Rel::T, {d, e, f});
          if (!prem) return Outcome{false, true};
          auto x1 = try_pt([&] { return ats(a, b, c, d, e, f); });
          auto x2 = try_pt([&] { return ato(a, b, c, d, e, f); });
          if (!x1 || !x2) return Outcome{true, false};
          bool concl = R.holds(Rel::OS, {*x2, f, d, e}) &&
                       R.holds(Rel::Lt, {d, e, mid(*x1, *x2)});
          return Outcome{true, concl};
        }));

    // ---- circle theorems -------------------------------------------------

    auto gen_cci = [](Rng& r) -> OptPts {
      Gen g(r);
      Frame F = g.frame();
      P2 c1 = g.p2();
      P2 va{g.q_nonzero(6), g.q(-6, 6)};
      P2 a{c1.x + va.x, c1.y + va.y};
      auto [rc, rs] = g.rot_pair(false);
      P2 b{c1.x + rc * va.x - rs * va.y, c1.y + rs * va.x + rc * va.y};
      P2 c2 = g.p2();
      mpq_class da = d2q(c2, a), db = d2q(c2, b);
      if (da == db) return std::nullopt;
      P2 aa = a, bb = b;
      if (da > db) {
        std::swap(aa, bb);
        std::swap(da, db);
      }
      mpq_class w = da + g.q_open01() * (db - da);
      Point D = F.at(Real(c2.x) + Real(w).sqrt(), Real(c2.y));
      return Pts{g.map(F, c1), g.map(F, aa), g.map(F, bb), g.map(F, c2), D};
    };

    v.push_back(mk(
        "THM-cci-second",
        "the uniform second intersection point is distinct and satisfies "
        "both distance constraints",
        "", 250, gen_cci,
        [](std::span<const Point> p, const RelEval& R) {
          const Point &c1 = p[0], &a = p[1], &b = p[2], &c2 = p[3], &d = p[4];
          bool prem = R.holds(Rel::C, {c1, a, c1, b}) &&
                      R.holds(Rel::SegLt, {c2, a, c2, d}) &&
                      R.holds(Rel::SegLt, {c2, d, c2, b});
          if (!prem) return Outcome{false, true};
          auto x = try_pt([&] { return cci(c1, a, b, c2, d); });
          auto y = try_pt([&] { return cci_second(c1, a, b, c2, d); });
          if (!x || !y) return Outcome{true, false};
          bool concl = !same_point(*x, *y) &&
                       R.holds(Rel::C, {c1, *y, c1, a}) &&
                       R.holds(Rel::C, {c2, *y, c2, d});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-line-circle",
        "two distinct points of the line at the circle's radius", "", 250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a = g.p2(), b = g.p2();
          if (a.x == b.x && a.y == b.y) return std::nullopt;
          // center: on the line occasionally, else anywhere
          P2 c = g.rng.chance(20)
                     ? along(a, {b.x - a.x, b.y - a.y}, g.q(-3, 3))
                     : g.p2();
          mpq_class da = d2q(c, a);
          mpq_class w = da + g.q_pos(6);  // strictly larger radius
          Point D = F.at(Real(c.x) + Real(w).sqrt(), Real(c.y));
          return Pts{g.map(F, c), D, g.map(F, a), g.map(F, b)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &c = p[0], &d = p[1], &a = p[2], &b = p[3];
          bool prem = R.holds(Rel::SegLt, {c, a, c, d}) &&
                      !same_point(c, d) && !same_point(a, b);
          if (!prem) return Outcome{false, true};
          auto xy = [&]() -> std::optional<std::pair<Point, Point>> {
            try {
              return line_circle(c, d, a, b);
            } catch (const ConstructionError&) {
              return std::nullopt;
            }
          }();
          if (!xy) return Outcome{true, false};
          bool concl = !same_point(xy->first, xy->second) &&
                       R.holds(Rel::Lt, {a, b, xy->first}) &&
                       R.holds(Rel::Lt, {a, b, xy->second}) &&
                       R.holds(Rel::C, {c, xy->first, c, d}) &&
                       R.holds(Rel::C, {c, xy->second, c, d});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-segment-circle",
        "ca < cd < cb -> the constructed point crosses between a and b at "
        "the radius",
        "the paper's layoff recipe takes the intersection on the foot's "
        "a-side, which misses the segment when the foot lies between a and "
        "b; the construction mirrors across the foot in that case",
        250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 c = g.p2();
          mpq_class ra = g.q(0, 3), w = 0, rb = 0;
          w = ra + g.q_pos(4);
          rb = w + g.q_pos(4);
          // a at distance^2 ra, b at distance^2 rb from c along skew dirs
          P2 da{g.q_nonzero(4), g.q(-4, 4)};
          mpq_class la = d2q({0, 0}, da);
          P2 db{g.q_nonzero(4), g.q(-4, 4)};
          mpq_class lb = d2q({0, 0}, db);
          Point A = F.at(Real(c.x) + Real(ra / la).sqrt() * Real(da.x),
                         Real(c.y) + Real(ra / la).sqrt() * Real(da.y));
          Point B = F.at(Real(c.x) + Real(rb / lb).sqrt() * Real(db.x),
                         Real(c.y) + Real(rb / lb).sqrt() * Real(db.y));
          Point D = F.at(Real(c.x) + Real(w).sqrt(), Real(c.y));
          if (same_point(A, B)) return std::nullopt;
          return Pts{g.map(F, c), D, A, B};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &c = p[0], &d = p[1], &a = p[2], &b = p[3];
          bool prem = R.holds(Rel::SegLt, {c, a, c, d}) &&
                      R.holds(Rel::SegLt, {c, d, c, b}) && !same_point(a, b);
          if (!prem) return Outcome{false, true};
          auto z = try_pt([&] { return segment_circle(c, d, a, b); });
          bool concl = z && R.holds(Rel::B, {a, *z, b}) &&
                       R.holds(Rel::C, {c, *z, c, d});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-unique-center",
        "three distinct points cannot be equidistant from two distinct "
        "centers",
        "a planar theorem; instances are generated coplanar per the solid "
        "modifications",
        250,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 o = g.p2();
          P2 vv{g.q_nonzero(5), g.q(-5, 5)};
          auto [c1r, s1r] = g.rot_pair(false);
          auto [c2r, s2r] = g.rot_pair(false);
          if (c1r == c2r && s1r == s2r) return std::nullopt;
          auto rot = [&](mpq_class c, mpq_class s) {
            return P2{o.x + c * vv.x - s * vv.y, o.y + s * vv.x + c * vv.y};
          };
          P2 a = {o.x + vv.x, o.y + vv.y};
          P2 b = rot(c1r, s1r), d = rot(c2r, s2r);
          // circumcenter by exact 2x2 solve (Cramer)
          mpq_class m00 = 2 * (b.x - a.x), m01 = 2 * (b.y - a.y);
          mpq_class m10 = 2 * (d.x - a.x), m11 = 2 * (d.y - a.y);
          mpq_class r0 = b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y;
          mpq_class r1 = d.x * d.x + d.y * d.y - a.x * a.x - a.y * a.y;
          mpq_class det = m00 * m11 - m01 * m10;
          if (det == 0) return std::nullopt;
          P2 cc{(r0 * m11 - r1 * m01) / det, (m00 * r1 - m10 * r0) / det};
          return Pts{g.map(F, a), g.map(F, b), g.map(F, d), g.map(F, o),
                     g.map(F, cc)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &d = p[2], &c1 = p[3], &c2 = p[4];
          bool prem = !same_point(a, b) && !same_point(a, d) &&
                      !same_point(b, d) &&
                      R.holds(Rel::C, {c1, a, c1, b}) &&
                      R.holds(Rel::C, {c1, b, c1, d}) &&
                      R.holds(Rel::C, {c2, a, c2, b}) &&
                      R.holds(Rel::C, {c2, b, c2, d});
          return Outcome{prem, !prem || same_point(c1, c2)};
        }));

    // ---- solid geometry --------------------------------------------------

    v.push_back(mk(
        "THM-solid-ortho-noncoplanar", "T(a,b,c) -> not PL_abc(o(a,b,c))",
        "", 300,
        [](Rng& r) -> OptPts {
          Gen g(r);
          if (g.rng.chance(10))
            return Pts{base_alpha(), base_beta(), base_gamma()};
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          return Pts{(*t)[0], (*t)[1], (*t)[2]};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::T, {p[0], p[1], p[2]});
          if (!prem) return Outcome{false, true};
          auto o = try_pt([&] { return ortho(p[0], p[1], p[2]); });
          return Outcome{true, o && !R.holds(Rel::PL, {p[0], p[1], p[2], *o})};
        }));

    auto gen_plane_normal = [](Rng& r, bool with_x) -> OptPts {
      Gen g(r);
      Frame F = g.frame();
      auto t = tri_in(g, F);
      if (!t) return std::nullopt;
      Point n = normal_of(F);
      Point d = (*t)[1] + Real(g.q_nonzero(3)) * n;
      Pts out{(*t)[0], (*t)[1], (*t)[2], d};
      if (with_x) {
        Point x = g.free_point(F);
        if (same_point(x, (*t)[1])) return std::nullopt;
        out.push_back(x);
      }
      return out;
    };

    v.push_back(mk(
        "THM-solid-prop4",
        "right angles to two sides at b extend to every plane direction", "",
        250, [gen_plane_normal](Rng& r) { return gen_plane_normal(r, true); },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &x = p[4];
          bool prem = R.holds(Rel::Right, {a, b, d}) &&
                      R.holds(Rel::Right, {c, b, d}) &&
                      R.holds(Rel::PL, {a, b, c, x}) && !same_point(x, b);
          return Outcome{prem, !prem || R.holds(Rel::Right, {x, b, d})};
        }));

    v.push_back(mk(
        "THM-solid-prop13",
        "a common perpendicular direction lies on the orthogonal "
        "construction's line",
        "", 250,
        [gen_plane_normal](Rng& r) { return gen_plane_normal(r, false); },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          bool prem = R.holds(Rel::T, {a, b, c}) &&
                      R.holds(Rel::Right, {a, b, d}) &&
                      R.holds(Rel::Right, {c, b, d});
          if (!prem) return Outcome{false, true};
          auto o = try_pt([&] { return ortho(a, b, c); });
          return Outcome{true, o && R.holds(Rel::Lt, {b, d, *o})};
        }));

    v.push_back(mk(
        "THM-solid-orthogonals-parallel",
        "orthogonal points over one plane give parallel segments", "", 200,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t1 = tri_in(g, F);
          auto t2 = tri_in(g, F);
          if (!t1 || !t2) return std::nullopt;
          if (same_point((*t2)[1], (*t1)[1])) return std::nullopt;
          Pts out(t1->begin(), t1->end());
          out.insert(out.end(), t2->begin(), t2->end());
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5];
          bool prem = R.holds(Rel::PL, {a, b, c, d}) &&
                      R.holds(Rel::PL, {a, b, c, e}) &&
                      R.holds(Rel::PL, {a, b, c, f}) &&
                      R.holds(Rel::T, {d, e, f}) && !same_point(e, b);
          if (!prem) return Outcome{false, true};
          auto o1 = try_pt([&] { return ortho(a, b, c); });
          auto o2 = try_pt([&] { return ortho(d, e, f); });
          return Outcome{true, o1 && o2 &&
                                   R.holds(Rel::Par, {b, *o1, e, *o2})};
        }));

    v.push_back(mk(
        "THM-solid-para-plane-right",
        "a segment parallel to the plane's orthogonal is right to every "
        "plane direction at its foot",
        "", 200,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          Point d = g.free_point(F);
          if (same_point(d, (*t)[1])) return std::nullopt;
          auto o = try_pt([&] { return ortho((*t)[0], (*t)[1], (*t)[2]); });
          if (!o) return std::nullopt;
          Point e = d + Real(g.q_nonzero(3)) * (*o - (*t)[1]);
          Point x = g.free_point(F);
          if (same_point(x, d)) return std::nullopt;
          return Pts{(*t)[0], (*t)[1], (*t)[2], d, e, x};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &x = p[5];
          auto o = try_pt([&] { return ortho(a, b, c); });
          if (!o) return Outcome{false, true};
          bool prem = R.holds(Rel::PL, {a, b, c, d}) &&
                      R.holds(Rel::Par, {b, *o, d, e}) &&
                      R.holds(Rel::PL, {a, b, c, x}) && !same_point(x, d);
          return Outcome{prem, !prem || R.holds(Rel::Right, {x, d, e})};
        }));

    v.push_back(mk(
        "THM-solid-plane-meet",
        "plane_meet yields a second common point of both planes", "", 200,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F1 = g.frame();
          Point x = g.at(F1);
          Frame F2 = g.rng.chance(25) ? F1 : g.plane_at(x);
          auto t1 = tri_in(g, F1);
          auto t2 = tri_in(g, F2);
          if (!t1 || !t2) return std::nullopt;
          Pts out(t1->begin(), t1->end());
          out.insert(out.end(), t2->begin(), t2->end());
          out.push_back(x);
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5], &x = p[6];
          bool prem = R.holds(Rel::PL, {a, b, c, x}) &&
                      R.holds(Rel::PL, {d, e, f, x});
          if (!prem) return Outcome{false, true};
          auto pm = try_pt([&] { return plane_meet(a, b, c, d, e, f, x); });
          bool concl = pm && R.holds(Rel::PL, {a, b, c, *pm}) &&
                       R.holds(Rel::PL, {d, e, f, *pm}) && !same_point(*pm, x);
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "THM-solid-planes-intersect-line",
        "distinct planes meet along the line of their common points", "", 200,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Point x0 = g.space_point();
          Frame F1 = g.plane_at(x0);
          Frame F2 = g.plane_at(x0);
          auto t1 = tri_in(g, F1);
          auto t2 = tri_in(g, F2);
          if (!t1 || !t2) return std::nullopt;
          Point dir = cross(normal_of(F1), normal_of(F2));
          if (is_zero_vec(dir)) return std::nullopt;  // same plane
          Point y = x0 + Real(g.q_nonzero(3)) * dir;
          Pts out(t1->begin(), t1->end());
          out.insert(out.end(), t2->begin(), t2->end());
          out.push_back(x0);
          out.push_back(y);
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5], &x = p[6], &y = p[7];
          bool prem = R.holds(Rel::PL, {a, b, c, x}) &&
                      R.holds(Rel::PL, {d, e, f, x}) &&
                      R.holds(Rel::PL, {a, b, c, y}) &&
                      R.holds(Rel::PL, {d, e, f, y}) &&
                      !R.holds(Rel::PL, {a, b, c, d});
          if (!prem) return Outcome{false, true};
          auto pm = try_pt([&] { return plane_meet(a, b, c, d, e, f, x); });
          return Outcome{true, pm && R.holds(Rel::Lt, {x, y, *pm})};
        }));

    v.push_back(mk(
        "THM-solid-normals-same-plane",
        "planes with parallel orthogonals and a common point coincide", "",
        200,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t1 = tri_in(g, F);
          auto t2 = tri_in(g, F);
          if (!t1 || !t2) return std::nullopt;
          if (same_point((*t2)[1], (*t1)[1])) return std::nullopt;
          Pts out(t1->begin(), t1->end());
          out.insert(out.end(), t2->begin(), t2->end());
          out.push_back(g.free_point(F));
          out.push_back(g.free_point(F));
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5], &x = p[6], &y = p[7];
          auto o1 = try_pt([&] { return ortho(a, b, c); });
          auto o2 = try_pt([&] { return ortho(d, e, f); });
          if (!o1 || !o2) return Outcome{false, true};
          bool prem = R.holds(Rel::Par, {b, *o1, e, *o2}) &&
                      R.holds(Rel::PL, {a, b, c, x}) &&
                      R.holds(Rel::PL, {d, e, f, x});
          if (!prem) return Outcome{false, true};
          bool concl = !R.holds(Rel::PL, {a, b, c, y}) ||
                       R.holds(Rel::PL, {d, e, f, y});
          return Outcome{true, concl};
        }));

    // plane sides ---------------------------------------------------------

    auto gen_plane_sides = [](Rng& r, bool opposite) -> OptPts {
      Gen g(r);
      Frame F = g.frame();
      auto t1 = tri_in(g, F);
      auto t2 = tri_in(g, F);
      if (!t1 || !t2) return std::nullopt;
      Point n = normal_of(F);
      Point x = g.at(F) + Real(g.q_pos(4)) * n;
      Point y = g.at(F) +
                Real(opposite ? -g.q_pos(4) : g.q_pos(4)) * n;
      // sidestep the measure-zero vertex coincidences the paper's
      // definitions are sensitive to
      for (const Point& vertex : {(*t1)[1], (*t2)[1], (*t1)[0], (*t1)[2]})
        if (colinear_loose(x, vertex, y)) return std::nullopt;
      Pts out(t1->begin(), t1->end());
      out.insert(out.end(), t2->begin(), t2->end());
      out.push_back(x);
      out.push_back(y);
      return out;
    };

    v.push_back(mk(
        "THM-solid-os-plane-rebase",
        "OS over abc transfers to any same-plane triangle def",
        "instances avoid the crossing point landing on a named vertex; the "
        "paper's OS-plane is sensitive to the middle vertex",
        200, [gen_plane_sides](Rng& r) { return gen_plane_sides(r, true); },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5], &x = p[6], &y = p[7];
          bool prem = R.holds(Rel::PL, {a, b, c, d}) &&
                      R.holds(Rel::PL, {a, b, c, e}) &&
                      R.holds(Rel::PL, {a, b, c, f}) &&
                      R.holds(Rel::T, {d, e, f}) &&
                      R.holds(Rel::OSP, {x, y, a, b, c});
          return Outcome{prem,
                         !prem || R.holds(Rel::OSP, {x, y, d, e, f})};
        }));

    v.push_back(mk(
        "THM-solid-ss-plane-rebase",
        "SS over abc transfers to any same-plane triangle def", "", 200,
        [gen_plane_sides](Rng& r) { return gen_plane_sides(r, false); },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5], &x = p[6], &y = p[7];
          bool prem = R.holds(Rel::PL, {a, b, c, d}) &&
                      R.holds(Rel::PL, {a, b, c, e}) &&
                      R.holds(Rel::PL, {a, b, c, f}) &&
                      R.holds(Rel::T, {d, e, f}) &&
                      R.holds(Rel::SSP, {x, y, a, b, c});
          return Outcome{prem,
                         !prem || R.holds(Rel::SSP, {x, y, d, e, f})};
        }));

    v.push_back(mk(
        "THM-solid-os-plane-props",
        "OS-plane symmetry, permutation stability, and OS then OS gives SS",
        "permutations are checked across the paper's proven set (bac, cba); "
        "instances avoid vertex coincidences",
        200,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          Point n = normal_of(F);
          Point x = g.at(F) + Real(g.q_pos(4)) * n;
          Point y = g.at(F) - Real(g.q_pos(4)) * n;
          Point z = g.at(F) + Real(g.q_pos(4)) * n;
          for (const Point& vx : *t) {
            if (colinear_loose(x, vx, y)) return std::nullopt;
            if (colinear_loose(y, vx, z)) return std::nullopt;
          }
          return Pts{(*t)[0], (*t)[1], (*t)[2], x, y, z};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &x = p[3], &y = p[4],
                      &z = p[5];
          bool prem = R.holds(Rel::OSP, {x, y, a, b, c});
          if (!prem) return Outcome{false, true};
          bool sym = R.holds(Rel::OSP, {y, x, a, b, c});
          bool perm = R.holds(Rel::OSP, {x, y, b, a, c}) &&
                      R.holds(Rel::OSP, {x, y, c, b, a});
          bool mix = !R.holds(Rel::OSP, {y, z, a, b, c}) ||
                     R.holds(Rel::SSP, {x, z, a, b, c});
          return Outcome{true, sym && perm && mix};
        }));

    v.push_back(mk(
        "THM-solid-ss-plane-props",
        "SS-plane reflexivity, symmetry, permutation stability, "
        "transitivity",
        "", 200,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = tri_in(g, F);
          if (!t) return std::nullopt;
          Point n = normal_of(F);
          Point x = g.at(F) + Real(g.q_pos(4)) * n;
          Point y = g.at(F) + Real(g.q_pos(4)) * n;
          Point z = g.at(F) + Real(g.q_pos(4)) * n;
          return Pts{(*t)[0], (*t)[1], (*t)[2], x, y, z};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &x = p[3], &y = p[4],
                      &z = p[5];
          bool prem = R.holds(Rel::SSP, {x, y, a, b, c});
          if (!prem) return Outcome{false, true};
          bool refl = R.holds(Rel::SSP, {x, x, a, b, c});
          bool sym = R.holds(Rel::SSP, {y, x, a, b, c});
          bool perm = R.holds(Rel::SSP, {x, y, b, a, c}) &&
                      R.holds(Rel::SSP, {x, y, c, b, a});
          bool trans = !R.holds(Rel::SSP, {y, z, a, b, c}) ||
                       R.holds(Rel::SSP, {x, z, a, b, c});
          return Outcome{true, refl && sym && perm && trans};
        }));

    return v;
  }();
  return specs;
}

}  // namespace geo::conf
