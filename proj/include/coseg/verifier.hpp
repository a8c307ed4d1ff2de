#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coseg/errors.hpp"
#include "coseg/geometry.hpp"
#include "coseg/graph.hpp"
#include "coseg/representation.hpp"

namespace coseg {

// One tag per clause of a special ray's contract.
enum class Clause {
  start_interior,       // starts at an interior point of exactly one of its two segments
  through_endpoint,     // passes through an endpoint of the other segment
  no_other_contact,     // meets its start segment only at the start, the other in at most one point
  crosses_all_segments, // crosses every segment but its own two
  crosses_all_rays,     // crosses every other special ray
};

inline const char* to_string(Clause c) {
  switch (c) {
    case Clause::start_interior: return "start-interior";
    case Clause::through_endpoint: return "through-endpoint";
    case Clause::no_other_contact: return "no-other-contact";
    case Clause::crosses_all_segments: return "crosses-all-segments";
    case Clause::crosses_all_rays: return "crosses-all-rays";
  }
  return "?";
}

struct RayFinding {
  Edge edge;
  Clause clause = Clause::start_interior;
  bool pass = true;
  std::string detail;  // empty on pass
  std::optional<Point> witness;
};

struct AuditReport {
  bool ok = false;
  bool complement_ok = false;
  std::vector<RayFinding> per_ray_findings;
  std::vector<Edge> mismatched_pairs;

  std::vector<RayFinding> failures() const {
    std::vector<RayFinding> out;
    for (const auto& f : per_ray_findings)
      if (!f.pass) out.push_back(f);
    return out;
  }

  std::string summary() const {
    std::ostringstream os;
    os << (ok ? "OK" : "FAILED") << ": " << per_ray_findings.size() << " ray clauses checked";
    for (const auto& f : per_ray_findings)
      if (!f.pass) os << "\n  ray " << f.edge.u << "-" << f.edge.v << " " << to_string(f.clause) << ": " << f.detail;
    if (!complement_ok) {
      os << "\n  intersection graph differs from the complement on";
      for (const Edge& e : mismatched_pairs) os << " " << e.u << "-" << e.v;
    }
    return os.str();
  }

  friend bool operator==(const AuditReport& a, const AuditReport& b) {
    if (a.ok != b.ok || a.complement_ok != b.complement_ok || a.mismatched_pairs != b.mismatched_pairs ||
        a.per_ray_findings.size() != b.per_ray_findings.size())
      return false;
    for (std::size_t i = 0; i < a.per_ray_findings.size(); ++i) {
      const auto& x = a.per_ray_findings[i];
      const auto& y = b.per_ray_findings[i];
      if (x.edge != y.edge || x.clause != y.clause || x.pass != y.pass || x.detail != y.detail || x.witness != y.witness)
        return false;
    }
    return true;
  }
};

// Edge uw iff s_u and s_w share at least one point.
inline Graph intersection_graph(const std::map<Vertex, Segment>& segments) {
  int n = segments.empty() ? 0 : segments.rbegin()->first + 1;
  Graph g(n);
  for (auto i = segments.begin(); i != segments.end(); ++i)
    for (auto j = std::next(i); j != segments.end(); ++j)
      if (seg_seg(i->second, j->second).intersects()) g.add_edge(i->first, j->first);
  return g;
}

// Whether the audit covers every vertex of G or only those that already have a
// segment (partial representations during construction).
enum class AuditScope { full, present };

namespace detail {

inline std::string edge_name(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

inline void check_structure(const CompatibleRepresentation& rep, AuditScope scope) {
  const Graph& gt = rep.tt.completed;
  if (rep.tt.original.n() != gt.n()) throw StructuralMismatch("G and G_T have different vertex counts");
  for (const auto& [v, s] : rep.segments)
    if (v < 0 || v >= gt.n()) throw StructuralMismatch("segment for unknown vertex " + std::to_string(v));
  if (scope == AuditScope::full)
    for (Vertex v = 0; v < gt.n(); ++v)
      if (!rep.segments.count(v)) throw StructuralMismatch("missing segment for vertex " + std::to_string(v));
  for (const auto& [e, r] : rep.special_rays) {
    if (!gt.has_edge(e)) throw StructuralMismatch("special ray " + edge_name(e) + " is not an edge of G_T");
    if (!rep.segments.count(e.u) || !rep.segments.count(e.v))
      throw StructuralMismatch("special ray " + edge_name(e) + " refers to a vertex without a segment");
  }
  for (const Edge& e : gt.edges())
    if (rep.segments.count(e.u) && rep.segments.count(e.v) && !rep.special_rays.count(e))
      throw StructuralMismatch("missing special ray for edge " + edge_name(e));
}

inline void audit_ray(const CompatibleRepresentation& rep, const Edge& e, const Ray& r, std::vector<RayFinding>& out) {
  const Segment& su = rep.segments.at(e.u);
  const Segment& sv = rep.segments.at(e.v);

  auto endpoint_on = [&r](const Segment& s) -> std::optional<Point> {
    if (on_ray(s.a(), r)) return s.a();
    if (on_ray(s.b(), r)) return s.b();
    return std::nullopt;
  };

  // Decide which segment the ray is meant to start on.
  bool in_u = in_interior(r.start(), su);
  bool in_v = in_interior(r.start(), sv);
  bool start_on_u;
  if (in_u != in_v) {
    start_on_u = in_u;
  } else {
    bool end_u = endpoint_on(su).has_value();
    bool end_v = endpoint_on(sv).has_value();
    start_on_u = !(end_u && !end_v);
  }
  const Segment& home = start_on_u ? su : sv;
  const Segment& far = start_on_u ? sv : su;
  const Vertex home_id = start_on_u ? e.u : e.v;
  const Vertex far_id = start_on_u ? e.v : e.u;

  RayFinding start{e, Clause::start_interior, true, {}, std::nullopt};
  if (!in_interior(r.start(), home) || on_segment(r.start(), far)) {
    start.pass = false;
    start.detail = "start is not interior to exactly one of s_" + std::to_string(e.u) + ", s_" + std::to_string(e.v);
    start.witness = r.start();
  }
  out.push_back(std::move(start));

  RayFinding through{e, Clause::through_endpoint, true, {}, std::nullopt};
  if (!endpoint_on(far)) {
    through.pass = false;
    through.detail = "no endpoint of s_" + std::to_string(far_id) + " lies on the ray";
  }
  out.push_back(std::move(through));

  RayFinding contact{e, Clause::no_other_contact, true, {}, std::nullopt};
  Relation with_home = ray_seg(r, home);
  Relation with_far = ray_seg(r, far);
  bool home_ok = !with_home.intersects() || (with_home.tag != RelationTag::overlap && with_home.witness == r.start());
  bool far_ok = with_far.tag != RelationTag::overlap;
  if (!home_ok) {
    contact.pass = false;
    contact.detail = std::string("ray meets s_") + std::to_string(home_id) + " away from its start (" +
                     to_string(with_home.tag) + ")";
    contact.witness = with_home.witness;
  } else if (!far_ok) {
    contact.pass = false;
    contact.detail = "ray overlaps s_" + std::to_string(far_id);
  }
  out.push_back(std::move(contact));

  RayFinding segs{e, Clause::crosses_all_segments, true, {}, std::nullopt};
  for (const auto& [w, s] : rep.segments) {
    if (e.contains(w)) continue;
    Relation rel = ray_seg(r, s);
    if (rel.tag != RelationTag::cross) {
      segs.pass = false;
      segs.detail = "does not cross s_" + std::to_string(w) + " (" + to_string(rel.tag) + ")";
      segs.witness = rel.witness;
      break;
    }
  }
  out.push_back(std::move(segs));

  RayFinding rays{e, Clause::crosses_all_rays, true, {}, std::nullopt};
  for (const auto& [f, other] : rep.special_rays) {
    if (f == e) continue;
    Relation rel = ray_ray(r, other);
    if (rel.tag != RelationTag::cross) {
      rays.pass = false;
      rays.detail = "does not cross r_" + edge_name(f) + " (" + to_string(rel.tag) + ")";
      rays.witness = rel.witness;
      break;
    }
  }
  out.push_back(std::move(rays));
}

}  // namespace detail

// Independent check of a representation: the intersection graph of the
// segments must be the complement of G, and every special ray must satisfy
// its contract. Throws StructuralMismatch when entries are missing.
inline AuditReport audit_compatibility(const CompatibleRepresentation& rep, AuditScope scope = AuditScope::full) {
  detail::check_structure(rep, scope);
  AuditReport report;
  for (const auto& [e, r] : rep.special_rays) detail::audit_ray(rep, e, r, report.per_ray_findings);

  const Graph& g = rep.tt.original;
  for (auto i = rep.segments.begin(); i != rep.segments.end(); ++i)
    for (auto j = std::next(i); j != rep.segments.end(); ++j) {
      bool meets = seg_seg(i->second, j->second).intersects();
      if (meets == g.has_edge(i->first, j->first)) report.mismatched_pairs.emplace_back(i->first, j->first);
    }
  report.complement_ok = report.mismatched_pairs.empty();
  report.ok = report.complement_ok;
  for (const auto& f : report.per_ray_findings) report.ok = report.ok && f.pass;
  return report;
}

}  // namespace coseg
