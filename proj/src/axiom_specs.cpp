#include "gen.hpp"

// The 36 pinned axiom checks. Ids follow the paper's numbering where the
// text pins one; the remaining axioms fill the free slots in source order
// (so-ray, segment addition, the midpoint pair and bisymmetry take the tail).
// Each spec is a premise-directed generator plus a pure check; checks go
// through the RelEval gate so the mutation-sensitivity suite can bite.

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

// --- shared generators ----------------------------------------------------

OptPts gen_between(Rng& rng, int true_pct) {
  Gen g(rng);
  Frame F = g.frame();
  P2 a = g.p2(), c = g.p2();
  if (a.x == c.x && a.y == c.y) return std::nullopt;
  P2 b = g.p2();
  if (g.rng.chance(true_pct)) {
    mpq_class t = g.q_open01();
    b = {a.x + t * (c.x - a.x), a.y + t * (c.y - a.y)};
  }
  return Pts{g.map(F, a), g.map(F, b), g.map(F, c)};
}

OptPts gen_triangle(Rng& rng) {
  Gen g(rng);
  Frame F = g.frame();
  auto t = g.tri2();
  if (!t) return std::nullopt;
  return Pts{g.map(F, (*t)[0]), g.map(F, (*t)[1]), g.map(F, (*t)[2])};
}

// k triangles in one plane with prescribed orientation signs
OptPts gen_oriented(Rng& rng, std::initializer_list<int> orients) {
  Gen g(rng);
  Frame F = g.frame();
  Pts out;
  for (int o : orients) {
    auto t = g.tri2(o);
    if (!t) return std::nullopt;
    for (const P2& p : *t) out.push_back(g.map(F, p));
  }
  return out;
}

int rnd_sign(Rng& rng) { return rng.chance(50) ? 1 : -1; }

// a, c strictly on opposite sides of line b-d (all in one plane)
OptPts gen_opposite_sides(Rng& rng) {
  Gen g(rng);
  Frame F = g.frame();
  P2 b = g.p2(), d = g.p2();
  if (b.x == d.x && b.y == d.y) return std::nullopt;
  P2 dir{d.x - b.x, d.y - b.y};
  P2 n{-dir.y, dir.x};
  mpq_class s1 = g.q(-3, 3), s2 = g.q(-3, 3);
  mpq_class h1 = g.q_pos(4), h2 = g.q_pos(4);
  P2 a{b.x + s1 * dir.x + h1 * n.x, b.y + s1 * dir.y + h1 * n.y};
  P2 c{b.x + s2 * dir.x - h2 * n.x, b.y + s2 * dir.y - h2 * n.y};
  return Pts{g.map(F, d), g.map(F, a), g.map(F, b), g.map(F, c)};
}

OptPts gen_pair_maybe_equal(Rng& rng, int equal_pct) {
  Gen g(rng);
  Frame F = g.frame();
  P2 a = g.p2();
  P2 b = g.rng.chance(equal_pct) ? a : g.p2();
  return Pts{g.map(F, a), g.map(F, b)};
}

// distinct pair plus a second segment, sometimes null
OptPts gen_ext_input(Rng& rng) {
  Gen g(rng);
  Frame F = g.frame();
  P2 a = g.p2(), b = g.p2();
  if (a.x == b.x && a.y == b.y) return std::nullopt;
  P2 c = g.p2();
  P2 d = g.rng.chance(12) ? c : g.p2();
  Point B = g.rng.chance(25) ? g.free_point(F) : g.map(F, b);
  if (same_point(g.map(F, a), B)) return std::nullopt;
  return Pts{g.map(F, a), B, g.map(F, c), g.map(F, d)};
}

}  // namespace

const std::vector<CheckSpec>& axiom_specs() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> v;

    v.push_back(mk(
        "AX01-between-distinct", "B(a,b,c) -> a != b and a != c", "", 1000,
        [](Rng& r) { return gen_between(r, 70); },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::B, {p[0], p[1], p[2]});
          return Outcome{prem, !prem || (!same_point(p[0], p[1]) &&
                                         !same_point(p[0], p[2]))};
        }));

    v.push_back(mk(
        "AX02-between-symmetry", "B(a,b,c) -> B(c,b,a)", "", 1000,
        [](Rng& r) { return gen_between(r, 70); },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::B, {p[0], p[1], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::B, {p[2], p[1], p[0]})};
        }));

    v.push_back(mk(
        "AX03-between-exclusive", "not (B(a,b,c) and B(a,c,b))", "", 1000,
        [](Rng& r) { return gen_between(r, 50); },
        [](std::span<const Point> p, const RelEval& R) {
          return Outcome{true, !(R.holds(Rel::B, {p[0], p[1], p[2]}) &&
                                 R.holds(Rel::B, {p[0], p[2], p[1]}))};
        }));

    v.push_back(mk(
        "AX04-unique-line", "L(a,b,c) and L(a,b,d) -> L(a,c,d)",
        "the paper leaves distinctness of c,d tacit; instances use four "
        "distinct points (L is strict)",
        1000,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 base = g.p2();
          P2 dir{g.q_nonzero(), g.q_nonzero()};
          mpq_class ts[4] = {0, 0, 0, 0};
          for (int tries = 0; tries < 20; ++tries) {
            for (auto& t : ts) t = g.q(-6, 6);
            bool distinct = true;
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j)
                if (ts[i] == ts[j]) distinct = false;
            if (distinct) {
              Pts out;
              for (auto& t : ts)
                out.push_back(
                    g.map(F, {base.x + t * dir.x, base.y + t * dir.y}));
              return out;
            }
          }
          return std::nullopt;
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::L, {p[0], p[1], p[2]}) &&
                      R.holds(Rel::L, {p[0], p[1], p[3]});
          return Outcome{prem, !prem || R.holds(Rel::L, {p[0], p[2], p[3]})};
        }));

    v.push_back(mk(
        "AX05-base-triple", "T(alpha, beta, gamma)", "", 50,
        [](Rng&) -> OptPts { return Pts{}; },
        [](std::span<const Point>, const RelEval& R) {
          return Outcome{true, R.holds(Rel::T, {base_alpha(), base_beta(),
                                                base_gamma()})};
        }));

    v.push_back(mk(
        "AX06-so-triangle",
        "SO(abc,def) -> T(a,b,c), T(d,e,f), PL_abc(d), PL_abc(e), PL_abc(f)"
        " (modified form)",
        "", 1000,
        [](Rng& r) -> OptPts {
          if (r.chance(20)) {
            // junk: arbitrary space points
            Gen g(r);
            Pts out;
            for (int i = 0; i < 6; ++i) out.push_back(g.space_point());
            return out;
          }
          return gen_oriented(r, {rnd_sign(r), rnd_sign(r)});
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool so = R.holds(Rel::SO, {p[0], p[1], p[2], p[3], p[4], p[5]});
          bool concl =
              !so || (R.holds(Rel::T, {p[0], p[1], p[2]}) &&
                      R.holds(Rel::T, {p[3], p[4], p[5]}) &&
                      R.holds(Rel::PL, {p[0], p[1], p[2], p[3]}) &&
                      R.holds(Rel::PL, {p[0], p[1], p[2], p[4]}) &&
                      R.holds(Rel::PL, {p[0], p[1], p[2], p[5]}));
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "AX07-so-reflexive", "T(a,b,c) -> SO(abc,abc)", "", 1000,
        [](Rng& r) { return gen_triangle(r); },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::T, {p[0], p[1], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::SO, {p[0], p[1], p[2],
                                                          p[0], p[1], p[2]})};
        }));

    v.push_back(mk(
        "AX08-so-equivalence",
        "SO is symmetric and transitive on same-plane angles",
        "the axiom as printed (SO(abc,def) and SO(abc,ghi) -> SO(abc,ghi)) "
        "is vacuous; the surrounding text says symmetry and transitivity, "
        "which is what is checked",
        1000,
        [](Rng& r) {
          return gen_oriented(r, {rnd_sign(r), rnd_sign(r), rnd_sign(r)});
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::SO, {p[0], p[1], p[2], p[3], p[4], p[5]});
          if (!prem) return Outcome{false, true};
          bool sym = R.holds(Rel::SO, {p[3], p[4], p[5], p[0], p[1], p[2]});
          bool trans = !R.holds(Rel::SO, {p[3], p[4], p[5], p[6], p[7], p[8]}) ||
                       R.holds(Rel::SO, {p[0], p[1], p[2], p[6], p[7], p[8]});
          return Outcome{true, sym && trans};
        }));

    v.push_back(mk(
        "AX09-oo-reverse", "OO(abc,cba)", "", 1000,
        [](Rng& r) { return gen_triangle(r); },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::T, {p[0], p[1], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::OO, {p[0], p[1], p[2],
                                                          p[2], p[1], p[0]})};
        }));

    v.push_back(mk(
        "AX10-oo-oo-so", "OO(abc,def) and OO(def,ghi) -> SO(abc,ghi)", "",
        1000,
        [](Rng& r) {
          int s = rnd_sign(r);
          return gen_oriented(r, {s, -s, s});
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem =
              R.holds(Rel::OO, {p[0], p[1], p[2], p[3], p[4], p[5]}) &&
              R.holds(Rel::OO, {p[3], p[4], p[5], p[6], p[7], p[8]});
          return Outcome{prem, !prem || R.holds(Rel::SO, {p[0], p[1], p[2],
                                                          p[6], p[7], p[8]})};
        }));

    v.push_back(mk(
        "AX11-intersect-oo", "B(a,b,c) and T(a,c,d) -> OO(dba,dbc)", "", 1000,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a = g.p2(), c = g.p2();
          if (a.x == c.x && a.y == c.y) return std::nullopt;
          mpq_class t = g.q_open01();
          P2 b{a.x + t * (c.x - a.x), a.y + t * (c.y - a.y)};
          P2 d = g.p2();
          if (cross2(a, c, d) == 0) return std::nullopt;
          return Pts{g.map(F, a), g.map(F, b), g.map(F, c), g.map(F, d)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::B, {p[0], p[1], p[2]}) &&
                      R.holds(Rel::T, {p[0], p[2], p[3]});
          return Outcome{prem, !prem || R.holds(Rel::OO, {p[3], p[1], p[0],
                                                          p[3], p[1], p[2]})};
        }));

    v.push_back(mk(
        "AX12-crossbow",
        "OO(dba,dbc) -> Lt(b, cb(d,abc), d) and B(a, cb(d,abc), c)", "", 1000,
        [](Rng& r) { return gen_opposite_sides(r); },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &d = p[0], &a = p[1], &b = p[2], &c = p[3];
          bool prem = R.holds(Rel::OO, {d, b, a, d, b, c});
          if (!prem) return Outcome{false, true};
          auto x = try_pt([&] { return crossbow(d, a, b, c); });
          bool concl = x && R.holds(Rel::Lt, {b, *x, d}) &&
                       R.holds(Rel::B, {a, *x, c});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "AX13-triangle-oo", "T(a,b,c) -> OO(abc,bac)", "", 1000,
        [](Rng& r) { return gen_triangle(r); },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::T, {p[0], p[1], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::OO, {p[0], p[1], p[2],
                                                          p[1], p[0], p[2]})};
        }));

    v.push_back(mk(
        "AX14-seg-cong-reflexive", "C(ab,ab) and C(ab,ba)", "", 1000,
        [](Rng& r) { return gen_pair_maybe_equal(r, 10); },
        [](std::span<const Point> p, const RelEval& R) {
          return Outcome{true, R.holds(Rel::C, {p[0], p[1], p[0], p[1]}) &&
                                   R.holds(Rel::C, {p[0], p[1], p[1], p[0]})};
        }));

    v.push_back(mk(
        "AX15-ext-cong", "a != b -> C(b, ext(ab,cd), c, d)", "", 1000,
        [](Rng& r) { return gen_ext_input(r); },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          auto x = try_pt([&] { return ext(a, b, c, d); });
          return Outcome{true, x && R.holds(Rel::C, {b, *x, c, d})};
        }));

    v.push_back(mk(
        "AX16-ext-between", "a != b and c != d -> B(a, b, ext(ab,cd))", "",
        1000,
        [](Rng& r) -> OptPts {
          auto pts = gen_ext_input(r);
          if (!pts) return std::nullopt;
          if (same_point((*pts)[2], (*pts)[3])) return std::nullopt;
          return pts;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          auto x = try_pt([&] { return ext(a, b, c, d); });
          return Outcome{true, x && R.holds(Rel::B, {a, b, *x})};
        }));

    v.push_back(mk(
        "AX17-ext-unique",
        "(B(a,b,x) or b = x) and C(bx,cd) -> x = ext(ab,cd)", "", 600,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a = g.p2(), b = g.p2();
          if (a.x == b.x && a.y == b.y) return std::nullopt;
          P2 c = g.p2();
          P2 d = g.rng.chance(12) ? c : g.p2();
          Point A = g.map(F, a), B = g.map(F, b), C = g.map(F, c),
                D = g.map(F, d);
          // an independently expressed witness for the same point
          Point x;
          if (g.rng.chance(50)) {
            x = ext(A, B, D, C);  // reversed but congruent radius segment
          } else {
            auto m = g.motion(true);
            x = ext(A, B, m.apply(C), m.apply(D));
          }
          return Pts{A, B, C, D, x};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &x = p[4];
          bool prem = (R.holds(Rel::B, {a, b, x}) || same_point(b, x)) &&
                      R.holds(Rel::C, {b, x, c, d});
          if (!prem) return Outcome{false, true};
          auto e = try_pt([&] { return ext(a, b, c, d); });
          return Outcome{true, e && same_point(x, *e)};
        }));

    v.push_back(mk(
        "AX18-seg-cong-transitive", "C(ab,cd) and C(ab,ef) -> C(cd,ef)", "",
        1000,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          Point a = g.at(F), b = g.rng.chance(8) ? a : g.at(F);
          auto m1 = g.motion(true);
          auto m2 = g.motion(true);
          return Pts{a, b, m1.apply(a), m1.apply(b), m2.apply(a), m2.apply(b)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::C, {p[0], p[1], p[2], p[3]}) &&
                      R.holds(Rel::C, {p[0], p[1], p[4], p[5]});
          return Outcome{prem, !prem || R.holds(Rel::C, {p[2], p[3], p[4],
                                                         p[5]})};
        }));

    v.push_back(mk(
        "AX19-ac-triangle", "AC(abc,def) -> T(a,b,c) and T(d,e,f)", "", 1000,
        [](Rng& r) -> OptPts {
          Gen g(r);
          if (g.rng.chance(40)) {
            Gen g2(r);
            Pts out;
            for (int i = 0; i < 6; ++i) out.push_back(g2.space_point());
            return out;
          }
          auto t = gen_triangle(r);
          if (!t) return std::nullopt;
          Gen g3(r);
          auto m = g3.motion(true);
          Pts out = *t;
          for (int i = 0; i < 3; ++i) out.push_back(m.apply((*t)[i]));
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool ac = R.holds(Rel::AC, {p[0], p[1], p[2], p[3], p[4], p[5]});
          return Outcome{true, !ac || (R.holds(Rel::T, {p[0], p[1], p[2]}) &&
                                       R.holds(Rel::T, {p[3], p[4], p[5]}))};
        }));

    v.push_back(mk(
        "AX20-ats-transport",
        "T(a,b,c) and T(d,e,f) -> AC(abc, de ats), SS(ats, f, de), "
        "C(bc, e ats)",
        "", 500,
        [](Rng& r) -> OptPts {
          auto t1 = gen_triangle(r);
          auto t2 = gen_triangle(r);
          if (!t1 || !t2) return std::nullopt;
          Pts out = *t1;
          out.insert(out.end(), t2->begin(), t2->end());
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5];
          bool prem = R.holds(Rel::T, {a, b, c}) && R.holds(Rel::T, {d, e, f});
          if (!prem) return Outcome{false, true};
          auto x = try_pt([&] { return ats(a, b, c, d, e, f); });
          bool concl = x && R.holds(Rel::AC, {a, b, c, d, e, *x}) &&
                       R.holds(Rel::SS, {*x, f, d, e}) &&
                       R.holds(Rel::C, {b, c, e, *x});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "AX21-ats-unique",
        "AC(abc,dex), SS(f,x,de), C(bc,ex) -> x = ats(abc,def)", "", 400,
        [](Rng& r) -> OptPts {
          auto t1 = gen_triangle(r);
          auto t2 = gen_triangle(r);
          if (!t1 || !t2) return std::nullopt;
          Gen g(r);
          const Point &a = (*t1)[0], &b = (*t1)[1], &c = (*t1)[2];
          const Point &d = (*t2)[0], &e = (*t2)[1], &f = (*t2)[2];
          // same angle, differently expressed: scale the initial side and
          // slide the side witness around on f's side of de
          Point a2 = b + Real(g.q_pos(3)) * (a - b);
          Point f2 = e + Real(g.q_pos(3)) * (f - e) +
                     Real(g.q(-3, 3)) * (d - e);
          auto x = try_pt([&] { return ats(a2, b, c, d, e, f2); });
          if (!x) return std::nullopt;
          Pts out = *t1;
          out.insert(out.end(), t2->begin(), t2->end());
          out.push_back(*x);
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5], &x = p[6];
          bool prem = R.holds(Rel::AC, {a, b, c, d, e, x}) &&
                      R.holds(Rel::SS, {f, x, d, e}) &&
                      R.holds(Rel::C, {b, c, e, x});
          if (!prem) return Outcome{false, true};
          auto y = try_pt([&] { return ats(a, b, c, d, e, f); });
          return Outcome{true, y && same_point(x, *y)};
        }));

    v.push_back(mk(
        "AX22-same-ray-ac", "SD(b,c,d) and T(a,b,c) -> AC(abc,abd)", "", 1000,
        [](Rng& r) -> OptPts {
          auto t = gen_triangle(r);
          if (!t) return std::nullopt;
          Gen g(r);
          Point d = (*t)[1] + Real(g.q_pos(4)) * ((*t)[2] - (*t)[1]);
          Pts out = *t;
          out.push_back(d);
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::SD, {p[1], p[2], p[3]}) &&
                      R.holds(Rel::T, {p[0], p[1], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::AC, {p[0], p[1], p[2],
                                                          p[0], p[1], p[3]})};
        }));

    v.push_back(mk(
        "AX23-ac-reflexive", "AC(abc,abc) and AC(abc,cba)", "", 1000,
        [](Rng& r) { return gen_triangle(r); },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::T, {p[0], p[1], p[2]});
          bool concl = !prem || (R.holds(Rel::AC, {p[0], p[1], p[2], p[0],
                                                   p[1], p[2]}) &&
                                 R.holds(Rel::AC, {p[0], p[1], p[2], p[2],
                                                   p[1], p[0]}));
          return Outcome{prem, concl};
        }));

    v.push_back(mk(
        "AX24-ac-transitive", "AC(abc,def) and AC(abc,ghi) -> AC(def,ghi)",
        "", 300,
        [](Rng& r) -> OptPts {
          auto t1 = gen_triangle(r);
          auto t2 = gen_triangle(r);
          auto t3 = gen_triangle(r);
          if (!t1 || !t2 || !t3) return std::nullopt;
          const Point &a = (*t1)[0], &b = (*t1)[1], &c = (*t1)[2];
          auto x1 = try_pt([&] {
            return ats(a, b, c, (*t2)[0], (*t2)[1], (*t2)[2]);
          });
          auto x2 = try_pt([&] {
            return ats(a, b, c, (*t3)[0], (*t3)[1], (*t3)[2]);
          });
          if (!x1 || !x2) return std::nullopt;
          return Pts{a, b, c, (*t2)[0], (*t2)[1], *x1,
                     (*t3)[0], (*t3)[1], *x2};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem =
              R.holds(Rel::AC, {p[0], p[1], p[2], p[3], p[4], p[5]}) &&
              R.holds(Rel::AC, {p[0], p[1], p[2], p[6], p[7], p[8]});
          return Outcome{prem, !prem || R.holds(Rel::AC, {p[3], p[4], p[5],
                                                          p[6], p[7], p[8]})};
        }));

    v.push_back(mk(
        "AX25-sas",
        "T, T, C(ab,de), C(ac,df), AC(bac,edf) -> AC(abc,def)", "", 600,
        [](Rng& r) -> OptPts {
          auto t = gen_triangle(r);
          if (!t) return std::nullopt;
          Gen g(r);
          auto m = g.motion(true);
          Pts out = *t;
          for (int i = 0; i < 3; ++i) out.push_back(m.apply((*t)[i]));
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4],
                      &f = p[5];
          bool prem = R.holds(Rel::T, {a, b, c}) &&
                      R.holds(Rel::T, {d, e, f}) &&
                      R.holds(Rel::C, {a, b, d, e}) &&
                      R.holds(Rel::C, {a, c, d, f}) &&
                      R.holds(Rel::AC, {b, a, c, e, d, f});
          return Outcome{prem, !prem || R.holds(Rel::AC, {a, b, c, d, e, f})};
        }));

    v.push_back(mk(
        "AX26-pl-triangle", "PL_abc(d) -> T(a,b,c)", "", 1000,
        [](Rng& r) -> OptPts {
          Gen g(r);
          if (g.rng.chance(30)) {
            Pts out;
            for (int i = 0; i < 4; ++i) out.push_back(g.space_point());
            return out;
          }
          Frame F = g.frame();
          return Pts{g.at(F), g.at(F), g.at(F), g.free_point(F)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool pl = R.holds(Rel::PL, {p[0], p[1], p[2], p[3]});
          return Outcome{true, !pl || R.holds(Rel::T, {p[0], p[1], p[2]})};
        }));

    v.push_back(mk(
        "AX27-pl-base", "T(a,b,c) -> PL_abc(b)", "", 1000,
        [](Rng& r) { return gen_triangle(r); },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::T, {p[0], p[1], p[2]});
          return Outcome{prem, !prem || R.holds(Rel::PL, {p[0], p[1], p[2],
                                                          p[1]})};
        }));

    v.push_back(mk(
        "AX28-pl-transfer",
        "PL_abc(d), PL_abc(e), PL_abc(f), T(d,e,f), PL_abc(x) -> PL_def(x)",
        "", 700,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t1 = g.tri2();
          auto t2 = g.tri2();
          if (!t1 || !t2) return std::nullopt;
          Pts out;
          for (const P2& p : *t1) out.push_back(g.map(F, p));
          for (const P2& p : *t2) out.push_back(g.map(F, p));
          out.push_back(g.free_point(F));
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::PL, {p[0], p[1], p[2], p[3]}) &&
                      R.holds(Rel::PL, {p[0], p[1], p[2], p[4]}) &&
                      R.holds(Rel::PL, {p[0], p[1], p[2], p[5]}) &&
                      R.holds(Rel::T, {p[3], p[4], p[5]}) &&
                      R.holds(Rel::PL, {p[0], p[1], p[2], p[6]});
          return Outcome{prem, !prem || R.holds(Rel::PL, {p[3], p[4], p[5],
                                                          p[6]})};
        }));

    v.push_back(mk(
        "AX29-ortho-right",
        "a != b and c != b -> abo(a,b,c) right and cbo(a,b,c) right", "", 800,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 b = g.p2(), a = g.p2();
          if (a.x == b.x && a.y == b.y) return std::nullopt;
          P2 c = g.p2();
          if (g.rng.chance(25)) {
            mpq_class t = g.q_nonzero(3);
            c = {b.x + t * (a.x - b.x), b.y + t * (a.y - b.y)};
          }
          if (c.x == b.x && c.y == b.y) return std::nullopt;
          return Pts{g.map(F, a), g.map(F, b), g.map(F, c)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          auto o = try_pt([&] { return ortho(p[0], p[1], p[2]); });
          bool concl = o && R.holds(Rel::Right, {p[0], p[1], *o}) &&
                       R.holds(Rel::Right, {p[2], p[1], *o});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "AX30-perp-ortho-coplanar",
        "T(a,b,c) and dbo(a,b,c) right -> PL_abc(d)", "", 700,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          auto t = g.tri2();
          if (!t) return std::nullopt;
          Point a = g.map(F, (*t)[0]), b = g.map(F, (*t)[1]),
                c = g.map(F, (*t)[2]);
          Point d = g.rng.chance(80) ? g.free_point(F) : g.space_point();
          if (same_point(d, b)) return std::nullopt;
          return Pts{a, b, c, d};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
          auto o = try_pt([&] { return ortho(a, b, c); });
          if (!o) return Outcome{false, true};
          bool prem = R.holds(Rel::T, {a, b, c}) &&
                      R.holds(Rel::Right, {d, b, *o});
          return Outcome{prem, !prem || R.holds(Rel::PL, {a, b, c, d})};
        }));

    v.push_back(mk(
        "AX31-cci",
        "C(c1a,c1b), c2a < c2d, c2d < c2b (in one plane) -> distances and "
        "coplanarity of cci(c1,a,b,c2,d)",
        "", 400,
        [](Rng& r) -> OptPts {
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
          return Pts{g.map(F, c1), g.map(F, aa), g.map(F, bb), g.map(F, c2),
                     D};
        },
        [](std::span<const Point> p, const RelEval& R) {
          const Point &c1 = p[0], &a = p[1], &b = p[2], &c2 = p[3], &d = p[4];
          bool prem = R.holds(Rel::C, {c1, a, c1, b}) &&
                      R.holds(Rel::SegLt, {c2, a, c2, d}) &&
                      R.holds(Rel::SegLt, {c2, d, c2, b});
          if (!prem) return Outcome{false, true};
          auto x = try_pt([&] { return cci(c1, a, b, c2, d); });
          bool concl = x && R.holds(Rel::C, {c1, *x, c1, a}) &&
                       R.holds(Rel::C, {c2, *x, c2, d});
          if (concl && triangle(a, c1, b))
            concl = R.holds(Rel::PL, {a, c1, b, *x});
          return Outcome{true, concl};
        }));

    v.push_back(mk(
        "AX32-so-ray", "T(a,b,c) and SD(b,a,e) -> SO(abc,ebc)", "", 1000,
        [](Rng& r) -> OptPts {
          auto t = gen_triangle(r);
          if (!t) return std::nullopt;
          Gen g(r);
          Point e = (*t)[1] + Real(g.q_pos(4)) * ((*t)[0] - (*t)[1]);
          Pts out = *t;
          out.push_back(e);
          return out;
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::T, {p[0], p[1], p[2]}) &&
                      R.holds(Rel::SD, {p[1], p[0], p[3]});
          return Outcome{prem, !prem || R.holds(Rel::SO, {p[0], p[1], p[2],
                                                          p[3], p[1], p[2]})};
        }));

    v.push_back(mk(
        "AX33-seg-addition",
        "B(a,b,c), B(d,e,f), C(ab,de), C(bc,ef) -> C(ac,df)", "", 800,
        [](Rng& r) -> OptPts {
          Gen g(r);
          Frame F = g.frame();
          P2 a = g.p2();
          P2 dir{g.q_nonzero(), g.q_nonzero()};
          mpq_class t = g.q_open01();
          P2 b{a.x + t * dir.x, a.y + t * dir.y};
          P2 c{a.x + dir.x, a.y + dir.y};
          Point A = g.map(F, a), B = g.map(F, b), C = g.map(F, c);
          auto m = g.motion(true);
          return Pts{A, B, C, m.apply(A), m.apply(B), m.apply(C)};
        },
        [](std::span<const Point> p, const RelEval& R) {
          bool prem = R.holds(Rel::B, {p[0], p[1], p[2]}) &&
                      R.holds(Rel::B, {p[3], p[4], p[5]}) &&
                      R.holds(Rel::C, {p[0], p[1], p[3], p[4]}) &&
                      R.holds(Rel::C, {p[1], p[2], p[4], p[5]});
          return Outcome{prem, !prem || R.holds(Rel::C, {p[0], p[2], p[3],
                                                         p[5]})};
        }));

    v.push_back(mk(
        "AX34-mid-between",
        "a != b -> B(a, mid(a,b), b) and C(a mid(a,b), b mid(a,b))",
        "the paper prints C(ac,bc) with an unbound c; read as congruence of "
        "the two halves",
        1000,
        [](Rng& r) -> OptPts {
          auto pts = gen_pair_maybe_equal(r, 0);
          if (!pts || same_point((*pts)[0], (*pts)[1])) return std::nullopt;
          return pts;
        },
        [](std::span<const Point> p, const RelEval& R) {
          Point m = mid(p[0], p[1]);
          return Outcome{true, R.holds(Rel::B, {p[0], m, p[1]}) &&
                                   R.holds(Rel::C, {p[0], m, p[1], m})};
        }));

    v.push_back(mk(
        "AX35-mid-idempotent", "mid(a,a) = a", "", 500,
        [](Rng& r) -> OptPts {
          Gen g(r);
          return Pts{g.space_point()};
        },
        [](std::span<const Point> p, const RelEval&) {
          return Outcome{true, same_point(mid(p[0], p[0]), p[0])};
        }));

    v.push_back(mk(
        "AX36-bisymmetry",
        "mid(mid(a,b),mid(c,d)) = mid(mid(a,c),mid(b,d))", "", 1000,
        [](Rng& r) -> OptPts {
          Gen g(r);
          return Pts{g.space_point(), g.space_point(), g.space_point(),
                     g.space_point()};
        },
        [](std::span<const Point> p, const RelEval&) {
          Point lhs = mid(mid(p[0], p[1]), mid(p[2], p[3]));
          Point rhs = mid(mid(p[0], p[2]), mid(p[1], p[3]));
          return Outcome{true, same_point(lhs, rhs)};
        }));

    return v;
  }();
  return specs;
}

}  // namespace geo::conf
