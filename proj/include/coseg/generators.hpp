#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coseg/errors.hpp"
#include "coseg/graph.hpp"

namespace coseg {

enum class InstanceKind { partial2tree, outerplanar, seriesparallel };

inline const char* to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::partial2tree: return "partial2tree";
    case InstanceKind::outerplanar: return "outerplanar";
    case InstanceKind::seriesparallel: return "seriesparallel";
  }
  return "?";
}

inline InstanceKind parse_kind(std::string_view s) {
  if (s == "partial2tree") return InstanceKind::partial2tree;
  if (s == "outerplanar") return InstanceKind::outerplanar;
  if (s == "seriesparallel") return InstanceKind::seriesparallel;
  throw InvalidArgument("unknown instance kind '" + std::string(s) + "'");
}

// Edge survival probability num/den in [0, 1].
struct KeepProb {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  static KeepProb make(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num > den) throw InvalidArgument("keep probability must be a rational in [0,1]");
    std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }

  // Accepts "p/q", an integer, or a decimal such as "0.75".
  static KeepProb parse(std::string_view s) {
    auto digits = [](std::string_view t) {
      if (t.empty() || t.size() > 18) throw InvalidArgument("bad keep probability");
      std::uint64_t v = 0;
      for (char c : t) {
        if (c < '0' || c > '9') throw InvalidArgument("bad keep probability");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return v;
    };
    if (auto slash = s.find('/'); slash != std::string_view::npos)
      return make(digits(s.substr(0, slash)), digits(s.substr(slash + 1)));
    if (auto dotpos = s.find('.'); dotpos != std::string_view::npos) {
      std::string_view ip = s.substr(0, dotpos);
      std::string_view fp = s.substr(dotpos + 1);
      std::uint64_t den = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
      std::uint64_t whole = ip.empty() ? 0 : digits(ip);
      return make(whole * den + (fp.empty() ? 0 : digits(fp)), den);
    }
    return make(digits(s), 1);
  }

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

// mt19937_64 output is fixed by the standard; the distributions are not, so
// bounded draws are done here to keep instances identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  bool chance(const KeepProb& p) { return below(p.den) < p.num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline Graph thin_and_relabel(int n, const std::vector<Edge>& edges, const KeepProb& keep, Rng& rng, bool relabel) {
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  if (relabel) rng.shuffle(label);
  Graph g(n);
  for (const Edge& e : edges)
    if (rng.chance(keep)) g.add_edge(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]);
  return g;
}

inline void triangulate(Vertex lo, Vertex hi, Rng& rng, std::vector<Edge>& out) {
  if (hi - lo < 2) return;
  Vertex k = lo + 1 + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(hi - lo - 1)));
  if (k - lo > 1) out.emplace_back(lo, k);
  if (hi - k > 1) out.emplace_back(k, hi);
  triangulate(lo, k, rng, out);
  triangulate(k, hi, rng, out);
}

// Two-terminal series/parallel composition between s and t using `inner`
// fresh vertices taken from `next`.
inline void compose(Vertex s, Vertex t, int inner, Vertex& next, Rng& rng, std::vector<Edge>& out) {
  if (inner == 0) {
    out.emplace_back(s, t);
    return;
  }
  if (rng.below(2) == 0) {
    Vertex mid = next++;
    int left = static_cast<int>(rng.below(static_cast<std::uint64_t>(inner)));
    compose(s, mid, left, next, rng, out);
    compose(mid, t, inner - 1 - left, next, rng, out);
  } else {
    int left = static_cast<int>(rng.below(static_cast<std::uint64_t>(inner + 1)));
    compose(s, t, left, next, rng, out);
    compose(s, t, inner - left, next, rng, out);
  }
}

}  // namespace detail

// Random instance of the given kind on n vertices; every edge of the
// underlying maximal structure survives independently with probability `keep`.
inline Graph gen_instance(InstanceKind kind, int n, KeepProb keep, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("gen_instance needs n >= 2");
  if (keep.den == 0 || keep.num > keep.den) throw InvalidArgument("keep probability must be a rational in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  switch (kind) {
    case InstanceKind::partial2tree: {
      edges.emplace_back(0, 1);
      for (Vertex v = 2; v < n; ++v) {
        Edge host = edges[rng.below(edges.size())];
        edges.emplace_back(v, host.u);
        edges.emplace_back(v, host.v);
      }
      return detail::thin_and_relabel(n, edges, keep, rng, false);
    }
    case InstanceKind::outerplanar: {
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      if (n > 2) edges.emplace_back(0, n - 1);
      detail::triangulate(0, n - 1, rng, edges);
      return detail::thin_and_relabel(n, edges, keep, rng, true);
    }
    case InstanceKind::seriesparallel: {
      Vertex next = 2;
      detail::compose(0, 1, n - 2, next, rng, edges);
      std::set<Edge> unique(edges.begin(), edges.end());
      return detail::thin_and_relabel(n, {unique.begin(), unique.end()}, keep, rng, true);
    }
  }
  throw InvalidArgument("unknown instance kind");
}

}  // namespace coseg
