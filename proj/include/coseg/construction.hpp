#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "coseg/errors.hpp"
#include "coseg/geometry.hpp"
#include "coseg/graph.hpp"
#include "coseg/representation.hpp"
#include "coseg/verifier.hpp"

namespace coseg {

inline constexpr int kMaxShrinkLevel = 64;

// Two-vertex representation on {x, y} with the 2-tree being the edge xy.
// The segments are disjoint iff xy is an edge of G.
inline CompatibleRepresentation base_case(const TwoTreeCompletion& tt, Edge xy) {
  const bool edge_in_g = tt.original.has_edge(xy);
  CompatibleRepresentation rep;
  rep.tt = tt;
  rep.segments.emplace(xy.u, Segment({Rational(0), Rational(0)}, {Rational(4), Rational(0)}));
  if (edge_in_g)
    rep.segments.emplace(xy.v, Segment({Rational(2), Rational(1)}, {Rational(2), Rational(3)}));
  else
    rep.segments.emplace(xy.v, Segment({Rational(2), Rational(-1)}, {Rational(2), Rational(1)}));
  rep.special_rays.emplace(xy, Ray({Rational(1), Rational(0)}, {Rational(2), Rational(1)}));
  return rep;
}

inline CompatibleRepresentation base_case(bool edge_in_g) {
  Graph g(2);
  if (edge_in_g) g.add_edge(0, 1);
  Graph gt(2);
  gt.add_edge(0, 1);
  TwoTreeCompletion tt{g, gt, {}};
  if (!edge_in_g) tt.fill_edges.insert(Edge(0, 1));
  return base_case(tt, Edge(0, 1));
}

// Region around the special ray r_xy: l1 and l2 are parallel copies of r_xy
// starting on s_x at p1 and p2; q1, q2 are their farthest crossings with the
// objects r_xy crosses. Anything that meets p1p2 and crosses the gate q1q2
// crosses every object r_xy crosses.
struct Strip {
  Edge edge;
  Vertex x = 0;  // r_xy starts on s_x
  Vertex y = 0;
  Point p;
  Point p1;
  Point p2;
  Ray l1;
  Ray l2;
  Point q1;
  Point q2;
  Segment gate;
  Rational delta;      // half-width, in units of s_x's parameter
  Rational t_p;        // parameter of p on s_x
  Rational far1;       // parameter of q1 along l1 (multiples of r_xy's direction)
  Rational far2;
  std::optional<Rational> nearest;  // smallest crossing parameter on l1 or l2
};

struct PlacementParams {
  int shrink_level = 0;
  int side_of_sy = 1;
  bool yv_in_g = false;
  bool xv_in_g = false;
};

namespace detail {

// Orients an edge so that its special ray starts in the interior of the first segment.
inline std::pair<Vertex, Vertex> ray_home(const CompatibleRepresentation& rep, Edge xy) {
  const Ray& r = rep.special_rays.at(xy);
  if (in_interior(r.start(), rep.segments.at(xy.u))) return {xy.u, xy.v};
  if (in_interior(r.start(), rep.segments.at(xy.v))) return {xy.v, xy.u};
  throw InvalidArgument("special ray does not start inside either of its segments");
}

inline Rational param_on(const Segment& s, const Point& q) {
  Point w = s.direction();
  return dot(q - s.a(), w) / dot(w, w);
}

inline Point snap_point(const Point& q, const Rational& h) { return {snap_dyadic(q.x, h), snap_dyadic(q.y, h)}; }

}  // namespace detail

inline Strip build_strip(const CompatibleRepresentation& rep, Edge edge, const PlacementParams& params) {
  auto [x, y] = detail::ray_home(rep, edge);
  const Ray& r = rep.special_rays.at(edge);
  const Segment& sx = rep.segments.at(x);
  const Point& p = r.start();
  const Point u = r.direction();
  const Point w = sx.direction();
  const Rational t_p = detail::param_on(sx, p);

  // Closest other event on s_x bounds the half-width.
  Rational gap = min(t_p, Rational(1) - t_p);
  auto see = [&](const Point& q) {
    Rational d = (detail::param_on(sx, q) - t_p).abs();
    if (d.sign() > 0 && d < gap) gap = d;
  };
  auto see_relation = [&](const Relation& rel, const Point& a, const std::optional<Point>& b) {
    if (rel.witness) see(*rel.witness);
    if (rel.tag == RelationTag::overlap) {
      if (on_segment(a, sx)) see(a);
      if (b && on_segment(*b, sx)) see(*b);
    }
  };
  for (const auto& [v, s] : rep.segments)
    if (v != x) see_relation(seg_seg(sx, s), s.a(), s.b());
  for (const auto& [e, ray] : rep.special_rays)
    if (e != edge) see_relation(ray_seg(ray, sx), ray.start(), std::nullopt);

  const Rational delta = gap / pow2(1 + params.shrink_level);
  Point p1 = p - delta * w;
  Point p2 = p + delta * w;
  Ray l1(p1, p1 + u);
  Ray l2(p2, p2 + u);

  const Rational uu = dot(u, u);
  std::optional<Rational> far1, far2, nearest;
  auto record = [&](const Relation& on1, const Relation& on2, const char* what) {
    if (on1.tag != RelationTag::cross || on2.tag != RelationTag::cross)
      throw StripFailure(std::string("strip ray misses ") + what);
    Rational a1 = dot(*on1.witness - p1, u) / uu;
    Rational a2 = dot(*on2.witness - p2, u) / uu;
    far1 = far1 ? max(*far1, a1) : a1;
    far2 = far2 ? max(*far2, a2) : a2;
    Rational lo = min(a1, a2);
    nearest = nearest ? min(*nearest, lo) : lo;
  };
  for (const auto& [v, s] : rep.segments) {
    if (v == x || v == y || ray_seg(r, s).tag != RelationTag::cross) continue;
    record(ray_seg(l1, s), ray_seg(l2, s), "a segment");
  }
  for (const auto& [e, ray] : rep.special_rays) {
    if (e == edge || ray_ray(r, ray).tag != RelationTag::cross) continue;
    record(ray_ray(l1, ray), ray_ray(l2, ray), "a special ray");
  }
  // Nothing to cross: the gate is a unit advance along the strip.
  Rational tau1 = far1.value_or(Rational(1));
  Rational tau2 = far2.value_or(Rational(1));
  Point q1 = l1.at(tau1);
  Point q2 = l2.at(tau2);
  return Strip{edge, x, y, p, p1, p2, l1, l2, q1, q2, Segment(q1, q2), delta, t_p, tau1, tau2, nearest};
}

namespace detail {

// Candidate placement of s_v, r_xv and r_vy at one shrink level.
//
// Coordinates (a, b) stand for p + a*u + b*w, with u the direction of r_xy and
// w the direction of s_x, so s_x lies on a = 0 and r_xy on b = 0. s_v runs from
// near (0, beta) to (a_end, b_end) and crosses r_xy at a = T/2, where e_y = (T, 0)
// is the endpoint of s_y on r_xy. Whether s_v then meets s_y is decided by the
// side of r_xy that s_v occupies at a = T. r_xv starts on s_x at (0, c*beta)
// and passes through the far end of s_v; r_vy starts on s_v beyond the gate and
// passes through e_y back across s_x.
inline CompatibleRepresentation propose(const CompatibleRepresentation& rep, Vertex v, const Strip& strip,
                                        const PlacementParams& params) {
  const Ray& r = rep.special_rays.at(strip.edge);
  const Segment& sx = rep.segments.at(strip.x);
  const Segment& sy = rep.segments.at(strip.y);
  const Point& p = strip.p;
  const Point u = r.direction();
  const Point w = sx.direction();
  const Rational uu = dot(u, u);

  const Point e_y = on_ray(sy.a(), r) ? sy.a() : sy.b();
  if (!on_ray(e_y, r)) throw InvalidArgument("special ray misses both endpoints of its far segment");

  const Rational reach = e_y == p ? Rational(0) : dot(e_y - p, u) / uu;
  if (reach.sign() <= 0) throw InvalidArgument("far segment endpoint coincides with the ray start");

  const Rational half = Rational(1, 2);
  const Rational gate = max(max(strip.far1, strip.far2), reach) + Rational(1);
  const Rational a_cross = reach * half;
  const Rational a_start_ray = gate + Rational(1);
  const Rational a_end = gate + Rational(2);
  // Height at a = 0 of the line through the point of s_v at `a` and e_y, per unit beta.
  auto back_height = [&](const Rational& a) { return (a - a_cross) * reach / (a_cross * (a - reach)); };
  const Rational g_ray = back_height(a_start_ray);
  const Rational g_end = back_height(a_end);

  Rational lo = params.yv_in_g ? g_end : Rational(1);
  Rational hi = params.yv_in_g ? g_ray : g_end;
  const Rational c = (lo + hi) * half;
  const Rational margin = (hi - lo) * half;
  const Rational spread = max(max(g_ray, a_end / a_cross), c);

  const Rational beta_mag = floor_pow2(strip.delta / (Rational(4) * spread));
  // side_of_sy is an orientation sign; b-coordinates carry the extra sign of u x w.
  const int sy_side_b = params.side_of_sy * cross(u, w).sign();
  const int beta_side = params.yv_in_g ? sy_side_b : -sy_side_b;
  const Rational beta = beta_side > 0 ? beta_mag : -beta_mag;

  auto height = [&](const Rational& a) { return beta * (Rational(1) - a / a_cross); };
  auto at = [&](const Rational& a, const Rational& b) { return p + a * u + b * w; };

  Rational a_begin(0);
  if (params.xv_in_g) {
    Rational limit = strip.nearest ? min(*strip.nearest, a_cross) : a_cross;
    a_begin = limit / pow2(1 + params.shrink_level);
  }

  Rational tol = beta_mag * min(Rational(1), margin);
  if (a_begin.sign() > 0) tol = min(tol, a_begin);
  tol = tol / Rational(64);
  const Rational det = cross(u, w).abs();
  const Rational norm1 = u.x.abs() + u.y.abs() + w.x.abs() + w.y.abs();
  const Rational grid = tol * det / norm1;

  Point start;
  if (params.xv_in_g) {
    start = detail::snap_point(at(a_begin, height(a_begin)), grid);
  } else {
    start = sx.at(snap_dyadic(strip.t_p + beta, tol));
  }
  const Point finish = detail::snap_point(at(a_end, height(a_end)), grid);
  Segment sv(start, finish);

  Point xv_start = sx.at(snap_dyadic(strip.t_p + c * beta, beta_mag * margin / Rational(64)));
  Rational lambda = (a_start_ray - a_begin) / (a_end - a_begin);
  lambda = snap_dyadic(lambda, Rational(1) / (Rational(64) * (a_end - a_begin)));
  Point vy_start = sv.at(lambda);

  CompatibleRepresentation out = rep;
  out.segments.emplace(v, sv);
  out.special_rays.emplace(Edge(strip.x, v), Ray(xv_start, finish));
  out.special_rays.emplace(Edge(v, strip.y), Ray(vy_start, e_y));
  return out;
}

}  // namespace detail

// Which side of the supporting line of r_xy the free end of s_y lies on.
inline int side_of_far_segment(const CompatibleRepresentation& rep, Edge edge) {
  const Vertex y = detail::ray_home(rep, edge).second;
  const Ray& r = rep.special_rays.at(edge);
  const Segment& sy = rep.segments.at(y);
  const Point& free_end = on_ray(sy.a(), r) ? sy.b() : sy.a();
  int side = orient(r.start(), r.through(), free_end);
  return side == 0 ? 1 : side;
}

struct PlacementLog {
  int shrink_level = 0;
  int strip_failures = 0;
  int audit_failures = 0;
};

// Adds s_v, r_xv and r_vy for a vertex v whose 2-tree neighbours are x and y.
// Retries with growing shrink levels until the audit of the extended
// representation passes.
inline CompatibleRepresentation place_vertex(const CompatibleRepresentation& rep, Vertex v, Vertex x, Vertex y,
                                             bool yv_in_g, bool xv_in_g, PlacementLog* log = nullptr,
                                             int max_level = kMaxShrinkLevel) {
  if (rep.segments.count(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is already placed");
  const Edge edge(x, y);
  if (detail::ray_home(rep, edge).first != x) std::swap(yv_in_g, xv_in_g);

  PlacementParams params{0, side_of_far_segment(rep, edge), yv_in_g, xv_in_g};
  PlacementLog local;
  for (int level = 0; level <= max_level; ++level) {
    params.shrink_level = level;
    std::optional<Strip> strip;
    try {
      strip = build_strip(rep, edge, params);
    } catch (const StripFailure&) {
      ++local.strip_failures;
      continue;
    }
    CompatibleRepresentation next = detail::propose(rep, v, *strip, params);
    if (audit_compatibility(next, AuditScope::present).ok) {
      local.shrink_level = level;
      if (log) *log = local;
      return next;
    }
    ++local.audit_failures;
  }
  throw PlacementExhausted("no valid placement for vertex " + std::to_string(v) + " up to shrink level " +
                           std::to_string(max_level));
}

struct BuildResult {
  CompatibleRepresentation rep;
  TwoTreeCompletion tt;
  PeelSequence peel;
  std::vector<int> shrink_levels;  // one per placement step
};

using StepObserver = std::function<void(const CompatibleRepresentation&, std::size_t step)>;

// Base case on the peel sequence's base edge, then one placement per step.
// The observer sees the base representation (step 0) and each extension.
inline BuildResult build(const Graph& g, const StepObserver& observer = {}) {
  TwoTreeCompletion tt = recognize_and_complete(g);
  PeelSequence peel = peel_order(tt);
  CompatibleRepresentation rep = base_case(tt, peel.base_edge);
  if (observer) observer(rep, 0);
  std::vector<int> levels;
  levels.reserve(peel.steps.size());
  for (std::size_t i = 0; i < peel.steps.size(); ++i) {
    const PeelStep& s = peel.steps[i];
    PlacementLog log;
    rep = place_vertex(rep, s.v, s.x, s.y, g.has_edge(s.y, s.v), g.has_edge(s.x, s.v), &log);
    levels.push_back(log.shrink_level);
    if (observer) observer(rep, i + 1);
  }
  return BuildResult{std::move(rep), std::move(tt), std::move(peel), std::move(levels)};
}

}  // namespace coseg
