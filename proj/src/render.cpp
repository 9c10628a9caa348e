#include "hyparr/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hyparr {

namespace {

constexpr int kSize = 400;
constexpr int kMargin = 20;

struct Mapper {
  const RenderWindow& w;

  double sx(const Rational& x) const {
    Rational t = (x - w.x0) / (w.x1 - w.x0);
    return kMargin + t.get_d() * (kSize - 2 * kMargin);
  }
  double sy(const Rational& y) const {
    Rational t = (y - w.y0) / (w.y1 - w.y0);
    return kSize - kMargin - t.get_d() * (kSize - 2 * kMargin);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

bool in_window(const Vec<Rational>& p, const RenderWindow& w) {
  return p[0] >= w.x0 && p[0] <= w.x1 && p[1] >= w.y0 && p[1] <= w.y1;
}

// Exact clip of the line a x + b y = c to the window; the endpoints are the
// extreme boundary intersections along the line direction (-b, a).
std::vector<Vec<Rational>> clip_line(const Rational& a, const Rational& b, const Rational& c,
                                     const RenderWindow& w) {
  std::vector<Vec<Rational>> pts;
  auto push = [&](const Rational& x, const Rational& y) {
    Vec<Rational> p{x, y};
    if (!in_window(p, w)) return;
    for (const auto& q : pts)
      if (q == p) return;
    pts.push_back(std::move(p));
  };
  if (!FieldOps<Rational>::is_zero(b)) {
    push(w.x0, (c - a * w.x0) / b);
    push(w.x1, (c - a * w.x1) / b);
  }
  if (!FieldOps<Rational>::is_zero(a)) {
    push((c - b * w.y0) / a, w.y0);
    push((c - b * w.y1) / a, w.y1);
  }
  if (pts.size() < 2) return {};
  Vec<Rational> dir{-b, a};
  std::sort(pts.begin(), pts.end(), [&](const Vec<Rational>& p, const Vec<Rational>& q) {
    return dot<Rational>(dir, p) < dot<Rational>(dir, q);
  });
  if (pts.front() == pts.back()) return {};
  return {pts.front(), pts.back()};
}

}  // namespace

std::string render_svg(const Arrangement& a, const RenderWindow& win) {
  if (a.dim != 2) throw InputError("render requires a planar arrangement");
  if (!(win.x0 < win.x1) || !(win.y0 < win.y1))
    throw InputError("render window must have positive extent");
  Mapper m{win};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize - 2 * kMargin
      << "\" height=\"" << kSize - 2 * kMargin
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int h = 0; h < a.size(); ++h) {
    auto seg = clip_line(a.hyperplanes[h].normal[0], a.hyperplanes[h].normal[1],
                         a.hyperplanes[h].offset, win);
    if (seg.empty()) continue;
    bool last = h == a.size() - 1;
    out << "<line x1=\"" << fmt(m.sx(seg[0][0])) << "\" y1=\"" << fmt(m.sy(seg[0][1]))
        << "\" x2=\"" << fmt(m.sx(seg[1][0])) << "\" y2=\"" << fmt(m.sy(seg[1][1]))
        << "\" stroke=\"" << (last ? "red" : "black") << "\" stroke-width=\""
        << (last ? "2" : "1") << "\"/>\n";
  }
  SemiLattice lat = build_semilattice<Rational>(a);
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.dim_of(i) != 0) continue;
    const Vec<Rational>& p = lat.flats[i].point;
    if (!in_window(p, win)) continue;
    out << "<circle cx=\"" << fmt(m.sx(p[0])) << "\" cy=\"" << fmt(m.sy(p[1]))
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hyparr
