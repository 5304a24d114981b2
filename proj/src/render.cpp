#include "geo/render.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

namespace geo::render {

namespace {

struct Proj {
  double x, y, z;
};

double mid_double(const Real& v) {
  auto iv = v.approx(64);
  return (iv.lo.get_d() + iv.hi.get_d()) / 2;
}

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(4);
  o << std::fixed << v;
  return o.str();
}

}  // namespace

std::string to_svg(const script::Script& s,
                   const std::map<std::string, Point>& env) {
  // collect names referenced by assertions and queries, in first-use order
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::vector<const script::Statement*> checks;
  for (const auto& st : s.statements) {
    if (st.kind != script::Statement::Kind::Assert &&
        st.kind != script::Statement::Kind::Query)
      continue;
    checks.push_back(&st);
    for (const auto& a : st.args)
      if (env.count(a) && seen.insert(a).second) names.push_back(a);
  }

  std::map<std::string, Proj> pts;
  double lox = 0, hix = 1, loy = 0, hiy = 1;
  bool first = true;
  for (const auto& n : names) {
    const Point& p = env.at(n);
    Proj pr{mid_double(p.x), mid_double(p.y), mid_double(p.z)};
    pts[n] = pr;
    if (first) {
      lox = hix = pr.x;
      loy = hiy = pr.y;
      first = false;
    } else {
      lox = std::min(lox, pr.x);
      hix = std::max(hix, pr.x);
      loy = std::min(loy, pr.y);
      hiy = std::max(hiy, pr.y);
    }
  }
  double span = std::max({hix - lox, hiy - loy, 1e-9});
  const double size = 400, margin = 40;
  auto X = [&](double x) { return margin + (x - lox) / span * size; };
  auto Y = [&](double y) { return margin + (hiy - y) / span * size; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << size + 2 * margin << "\" height=\""
      << size + 2 * margin << "\" viewBox=\"0 0 " << size + 2 * margin << " "
      << size + 2 * margin << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto seg = [&](const std::string& a, const std::string& b) {
    if (!pts.count(a) || !pts.count(b)) return;
    svg << "  <line x1=\"" << fmt(X(pts[a].x)) << "\" y1=\""
        << fmt(Y(pts[a].y)) << "\" x2=\"" << fmt(X(pts[b].x)) << "\" y2=\""
        << fmt(Y(pts[b].y)) << "\" stroke=\"#3366aa\" stroke-width=\"1\"/>\n";
  };

  for (const auto* st : checks) {
    const auto& a = st->args;
    const std::string& rel = st->callee;
    if (rel == "B" || rel == "L" || rel == "Lt" || rel == "SD") {
      seg(a[0], a[2]);
    } else if (rel == "C" || rel == "SegLt" || rel == "Par") {
      seg(a[0], a[1]);
      seg(a[2], a[3]);
    } else if (rel == "Right" || rel == "T") {
      seg(a[0], a[1]);
      seg(a[1], a[2]);
    } else if (rel == "Pgram" || rel == "PgramN" || rel == "CQuad") {
      seg(a[0], a[1]);
      seg(a[1], a[2]);
      seg(a[2], a[3]);
      seg(a[3], a[0]);
    }
  }

  for (const auto& n : names) {
    const Proj& p = pts[n];
    double x = X(p.x), y = Y(p.y);
    if (std::abs(p.z) > 1e-12) {
      // dashed marker showing the z offset of a non-planar point
      double dz = p.z / span * size;
      svg << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\""
          << fmt(x) << "\" y2=\"" << fmt(y - dz)
          << "\" stroke=\"#999999\" stroke-width=\"1\" "
             "stroke-dasharray=\"3,3\"/>\n";
    }
    svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
        << "\" r=\"3\" fill=\"#aa3322\"/>\n";
    svg << "  <text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5)
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << n
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace geo::render
