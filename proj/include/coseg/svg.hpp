#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "coseg/document.hpp"
#include "coseg/errors.hpp"
#include "coseg/geometry.hpp"

namespace coseg {

// Axis-aligned drawing box in document coordinates. Rays are clipped to it.
struct Viewport {
  Rational min_x, min_y, max_x, max_y;
};

// Box around every segment endpoint, ray start/through point and pairwise
// segment witness, padded by 5% on each side (1 unit when flat).
inline Viewport fit_viewport(const RepresentationDocument& doc) {
  const auto& rep = doc.rep;
  std::vector<Point> pts;
  for (const auto& [v, s] : rep.segments) {
    pts.push_back(s.a());
    pts.push_back(s.b());
  }
  for (const auto& [e, r] : rep.special_rays) {
    pts.push_back(r.start());
    pts.push_back(r.through());
  }
  for (auto i = rep.segments.begin(); i != rep.segments.end(); ++i)
    for (auto j = std::next(i); j != rep.segments.end(); ++j)
      if (auto rel = seg_seg(i->second, j->second); rel.witness) pts.push_back(*rel.witness);
  if (pts.empty()) return {Rational(-1), Rational(-1), Rational(1), Rational(1)};
  Viewport vp{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point& p : pts) {
    vp.min_x = min(vp.min_x, p.x);
    vp.min_y = min(vp.min_y, p.y);
    vp.max_x = max(vp.max_x, p.x);
    vp.max_y = max(vp.max_y, p.y);
  }
  auto pad = [](Rational& lo, Rational& hi) {
    Rational span = hi - lo;
    Rational d = span.is_zero() ? Rational(1) : span / Rational(20);
    lo -= d;
    hi += d;
  };
  pad(vp.min_x, vp.max_x);
  pad(vp.min_y, vp.max_y);
  return vp;
}

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

// Far end of the ray inside the box (Liang-Barsky on the forward half-line).
inline std::pair<double, double> clip_ray(double sx, double sy, double dx, double dy, const double box[4]) {
  double t_max = 1e300;
  auto limit = [&](double d, double s, double lo, double hi) {
    if (d > 0) t_max = std::min(t_max, (hi - s) / d);
    else if (d < 0) t_max = std::min(t_max, (lo - s) / d);
  };
  limit(dx, sx, box[0], box[2]);
  limit(dy, sy, box[1], box[3]);
  t_max = std::max(t_max, 0.0);
  return {sx + t_max * dx, sy + t_max * dy};
}

}  // namespace detail

inline constexpr int kCanvasSize = 1000;
inline constexpr int kCanvasMargin = 40;

// SVG 1.1 drawing: one <polyline class="segment"> per vertex, one arrowed
// <line class="ray"> per special ray (dashed for fill edges of the 2-tree).
inline std::string render_svg(const RepresentationDocument& doc, const Viewport& vp) {
  if (!(vp.min_x < vp.max_x) || !(vp.min_y < vp.max_y)) throw InvalidArgument("degenerate viewport");
  const double box[4] = {vp.min_x.to_double(), vp.min_y.to_double(), vp.max_x.to_double(), vp.max_y.to_double()};
  const double span = std::max(box[2] - box[0], box[3] - box[1]);
  if (!(span > 0) || !std::isfinite(span)) throw InvalidArgument("degenerate viewport");
  const double scale = (kCanvasSize - 2 * kCanvasMargin) / span;
  auto X = [&](double x) { return detail::fmt(kCanvasMargin + (x - box[0]) * scale); };
  auto Y = [&](double y) { return detail::fmt(kCanvasSize - kCanvasMargin - (y - box[1]) * scale); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvasSize << "\" height=\""
     << kCanvasSize << "\" viewBox=\"0 0 " << kCanvasSize << ' ' << kCanvasSize << "\">\n"
     << "  <defs>\n"
     << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" "
        "orient=\"auto\">\n"
     << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c0392b\"/>\n"
     << "    </marker>\n"
     << "  </defs>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvasSize << "\" height=\"" << kCanvasSize << "\" fill=\"white\"/>\n";

  for (const auto& [e, r] : doc.rep.special_rays) {
    double sx = r.start().x.to_double(), sy = r.start().y.to_double();
    Point d = r.direction();
    auto [ex, ey] = detail::clip_ray(sx, sy, d.x.to_double(), d.y.to_double(), box);
    bool fill = doc.rep.tt.fill_edges.count(e) > 0;
    os << "  <line class=\"ray\" x1=\"" << X(sx) << "\" y1=\"" << Y(sy) << "\" x2=\"" << X(ex) << "\" y2=\"" << Y(ey)
       << "\" stroke=\"#c0392b\" stroke-width=\"1\"" << (fill ? " stroke-dasharray=\"6,4\"" : "")
       << " marker-end=\"url(#arrow)\"/>\n";
    os << "  <text class=\"ray-label\" x=\"" << X(ex) << "\" y=\"" << Y(ey) << "\" font-size=\"12\" fill=\"#c0392b\">r"
       << e.u << "," << e.v << "</text>\n";
  }
  for (const auto& [v, s] : doc.rep.segments) {
    double ax = s.a().x.to_double(), ay = s.a().y.to_double();
    double bx = s.b().x.to_double(), by = s.b().y.to_double();
    os << "  <polyline class=\"segment\" points=\"" << X(ax) << ',' << Y(ay) << ' ' << X(bx) << ',' << Y(by)
       << "\" fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"2\"/>\n";
    os << "  <text class=\"segment-label\" x=\"" << X((ax + bx) / 2) << "\" y=\"" << Y((ay + by) / 2)
       << "\" font-size=\"14\" fill=\"#1f3a93\">s" << v << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string render_svg(const RepresentationDocument& doc) { return render_svg(doc, fit_viewport(doc)); }

}  // namespace coseg
