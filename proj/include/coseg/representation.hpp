#pragma once

#include <map>

#include "coseg/geometry.hpp"
#include "coseg/graph.hpp"

namespace coseg {

// Segments for the vertices of G plus one special ray per edge of the 2-tree
// G_T. During construction only a subset of the vertices is present.
struct CompatibleRepresentation {
  std::map<Vertex, Segment> segments;
  std::map<Edge, Ray> special_rays;
  TwoTreeCompletion tt;
};

// Largest numerator/denominator bit length among all coordinates.
inline std::size_t max_coordinate_bits(const CompatibleRepresentation& rep) {
  std::size_t best = 0;
  auto see = [&best](const Point& p) {
    best = std::max({best, p.x.bit_length(), p.y.bit_length()});
  };
  for (const auto& [v, s] : rep.segments) {
    see(s.a());
    see(s.b());
  }
  for (const auto& [e, r] : rep.special_rays) {
    see(r.start());
    see(r.through());
  }
  return best;
}

}  // namespace coseg
