#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coseg/errors.hpp"

namespace coseg {

using Vertex = int;

// Unordered vertex pair stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool contains(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InvalidArgument("negative vertex count");
  }

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const { return a != b && valid(a) && valid(b) && edges_.count(Edge(a, b)) > 0; }
  bool has_edge(const Edge& e) const { return edges_.count(e) > 0; }
  const std::set<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Returns false when the edge was already present.
  bool add_edge(Vertex a, Vertex b) {
    if (!valid(a) || !valid(b))
      throw InvalidArgument("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for n=" +
                            std::to_string(n_));
    if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
    if (!edges_.insert(Edge(a, b)).second) return false;
    adj_[static_cast<std::size_t>(a)].insert(b);
    adj_[static_cast<std::size_t>(b)].insert(a);
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  bool valid(Vertex v) const { return v >= 0 && v < n_; }

  int n_ = 0;
  std::set<Edge> edges_;
  std::vector<std::set<Vertex>> adj_;
};

inline Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph out(g.n());
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      if (!g.has_edge(a, b)) out.add_edge(a, b);
  return out;
}

// Subgraph induced by the vertices flagged in `keep`; ids are preserved and
// vertices outside the set are left isolated.
inline Graph restrict_to(const Graph& g, const std::vector<bool>& keep) {
  Graph out(g.n());
  for (const Edge& e : g.edges())
    if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)]) out.add_edge(e.u, e.v);
  return out;
}

struct TwoTreeCompletion {
  Graph original;
  Graph completed;
  std::set<Edge> fill_edges;
};

struct PeelStep {
  Vertex v = 0;
  Vertex x = 0;
  Vertex y = 0;
  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

// Construction order: start from base_edge, then add each step's v adjacent to x and y.
struct PeelSequence {
  Edge base_edge;
  std::vector<PeelStep> steps;
};

// Eliminates vertices of degree <= 2 (lowest id first), filling the neighbours
// of degree-2 vertices, then re-inserts them in reverse to build a 2-tree that
// contains g as a spanning subgraph. Requires n >= 2.
inline TwoTreeCompletion recognize_and_complete(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw InvalidArgument("recognize_and_complete needs at least 2 vertices");

  std::vector<std::set<Vertex>> work(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    work[static_cast<std::size_t>(e.u)].insert(e.v);
    work[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  struct Removal {
    Vertex v;
    std::vector<Vertex> nbrs;
  };
  std::vector<Removal> removed;
  removed.reserve(static_cast<std::size_t>(n));

  for (int remaining = n; remaining > 2; --remaining) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[static_cast<std::size_t>(v)] && work[static_cast<std::size_t>(v)].size() <= 2) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw NotPartialTwoTree("every remaining vertex has degree >= 3");
    auto& nb = work[static_cast<std::size_t>(pick)];
    std::vector<Vertex> nbrs(nb.begin(), nb.end());
    for (Vertex w : nbrs) work[static_cast<std::size_t>(w)].erase(pick);
    if (nbrs.size() == 2) {
      work[static_cast<std::size_t>(nbrs[0])].insert(nbrs[1]);
      work[static_cast<std::size_t>(nbrs[1])].insert(nbrs[0]);
    }
    nb.clear();
    alive[static_cast<std::size_t>(pick)] = false;
    removed.push_back({pick, std::move(nbrs)});
  }

  Graph completed(n);
  {
    std::vector<Vertex> base;
    for (Vertex v = 0; v < n; ++v)
      if (alive[static_cast<std::size_t>(v)]) base.push_back(v);
    completed.add_edge(base[0], base[1]);
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const Vertex v = it->v;
    Edge attach;
    if (it->nbrs.size() == 2) {
      attach = Edge(it->nbrs[0], it->nbrs[1]);
    } else if (it->nbrs.size() == 1) {
      const Vertex x = it->nbrs[0];
      Vertex y = *completed.neighbors(x).begin();
      attach = Edge(x, y);
    } else {
      attach = *completed.edges().begin();
    }
    completed.add_edge(v, attach.u);
    completed.add_edge(v, attach.v);
  }

  TwoTreeCompletion out{g, completed, {}};
  for (const Edge& e : completed.edges())
    if (!g.has_edge(e)) out.fill_edges.insert(e);
  for (const Edge& e : g.edges())
    if (!completed.has_edge(e)) throw MalformedTwoTree("completion lost an original edge");
  return out;
}

// Peels degree-2 vertices with adjacent neighbours (lowest id first) from a
// 2-tree and returns the reverse, i.e. the construction order.
inline PeelSequence peel_order(const Graph& two_tree) {
  const int n = two_tree.n();
  if (n < 2) throw MalformedTwoTree("a 2-tree has at least 2 vertices");
  if (two_tree.m() != static_cast<std::size_t>(2 * n - 3))
    throw MalformedTwoTree("a 2-tree on " + std::to_string(n) + " vertices has " + std::to_string(2 * n - 3) +
                           " edges, got " + std::to_string(two_tree.m()));

  std::vector<std::set<Vertex>> work(static_cast<std::size_t>(n));
  for (const Edge& e : two_tree.edges()) {
    work[static_cast<std::size_t>(e.u)].insert(e.v);
    work[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<PeelStep> removal;
  for (int remaining = n; remaining > 2; --remaining) {
    std::optional<PeelStep> found;
    for (Vertex v = 0; v < n && !found; ++v) {
      const auto& nb = work[static_cast<std::size_t>(v)];
      if (!alive[static_cast<std::size_t>(v)] || nb.size() != 2) continue;
      Vertex x = *nb.begin();
      Vertex y = *nb.rbegin();
      if (work[static_cast<std::size_t>(x)].count(y)) found = PeelStep{v, x, y};
    }
    if (!found) throw MalformedTwoTree("no degree-2 vertex with adjacent neighbours remains");
    work[static_cast<std::size_t>(found->x)].erase(found->v);
    work[static_cast<std::size_t>(found->y)].erase(found->v);
    work[static_cast<std::size_t>(found->v)].clear();
    alive[static_cast<std::size_t>(found->v)] = false;
    removal.push_back(*found);
  }
  std::vector<Vertex> base;
  for (Vertex v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)]) base.push_back(v);
  if (!work[static_cast<std::size_t>(base[0])].count(base[1]))
    throw MalformedTwoTree("the last two vertices are not adjacent");

  PeelSequence seq{Edge(base[0], base[1]), {}};
  seq.steps.assign(removal.rbegin(), removal.rend());
  return seq;
}

inline PeelSequence peel_order(const TwoTreeCompletion& c) { return peel_order(c.completed); }

// Rebuilds the 2-tree described by a peel sequence.
inline Graph replay(int n, const PeelSequence& seq) {
  Graph g(n);
  g.add_edge(seq.base_edge.u, seq.base_edge.v);
  std::vector<bool> present(static_cast<std::size_t>(n), false);
  present[static_cast<std::size_t>(seq.base_edge.u)] = present[static_cast<std::size_t>(seq.base_edge.v)] = true;
  for (const PeelStep& s : seq.steps) {
    if (present[static_cast<std::size_t>(s.v)] || !present[static_cast<std::size_t>(s.x)] ||
        !present[static_cast<std::size_t>(s.y)] || !g.has_edge(s.x, s.y))
      throw MalformedTwoTree("peel step does not attach a new vertex to an existing edge");
    g.add_edge(s.v, s.x);
    g.add_edge(s.v, s.y);
    present[static_cast<std::size_t>(s.v)] = true;
  }
  return g;
}

}  // namespace coseg
