#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "coseg/construction.hpp"
#include "coseg/errors.hpp"
#include "coseg/graph.hpp"
#include "coseg/representation.hpp"

namespace coseg {

// ---------------------------------------------------------------------------
// Edge-list text: "n m", then m lines "u v"; '#' starts a comment line.

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<long, long>> header;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto fail = [&line_no](const std::string& why) -> InvalidArgument {
    return InvalidArgument("line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long a = 0, b = 0;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest)) throw fail("expected two integers");
    if (!header) {
      if (a < 0 || b < 0) throw fail("negative count in header");
      header = {a, b};
      continue;
    }
    if (a < 0 || a >= header->first || b < 0 || b >= header->first)
      throw fail("endpoint out of range for n=" + std::to_string(header->first));
    if (a == b) throw fail("self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!header) throw InvalidArgument("missing \"n m\" header");
  if (static_cast<long>(edges.size()) != header->second)
    throw InvalidArgument("header declares " + std::to_string(header->second) + " edges, found " +
                          std::to_string(edges.size()));
  return make_graph(static_cast<int>(header->first), edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Representation documents (JSON with exact rational strings).

struct DocumentMetadata {
  std::optional<std::uint64_t> seed;
  std::vector<int> shrink_levels;
  std::size_t max_coordinate_bits = 0;
  friend bool operator==(const DocumentMetadata&, const DocumentMetadata&) = default;
};

struct RepresentationDocument {
  CompatibleRepresentation rep;
  DocumentMetadata meta;
};

// n = 0 gives an empty document; n = 1 a single unit segment.
inline RepresentationDocument trivial_document(const Graph& g) {
  if (g.n() > 1) throw InvalidArgument("trivial documents have at most one vertex");
  RepresentationDocument doc;
  doc.rep.tt = TwoTreeCompletion{g, g, {}};
  if (g.n() == 1) doc.rep.segments.emplace(0, Segment({Rational(0), Rational(0)}, {Rational(1), Rational(0)}));
  return doc;
}

inline RepresentationDocument build_document(const Graph& g, std::optional<std::uint64_t> seed = std::nullopt) {
  if (g.n() <= 1) {
    RepresentationDocument doc = trivial_document(g);
    doc.meta.seed = seed;
    return doc;
  }
  BuildResult res = build(g);
  RepresentationDocument doc;
  doc.meta.seed = seed;
  doc.meta.shrink_levels = res.shrink_levels;
  doc.meta.max_coordinate_bits = max_coordinate_bits(res.rep);
  doc.rep = std::move(res.rep);
  return doc;
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson point_json(const Point& p) { return ojson::array({p.x.str(), p.y.str()}); }

inline Point point_from(const ojson& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw SchemaError(std::string(what) + " must be a pair of rational strings");
  auto coordinate = [&](const ojson& c) {
    const auto& text = c.get_ref<const std::string&>();
    Rational q;
    try {
      q = Rational::parse(text);
    } catch (const InvalidArgument& e) {
      throw SchemaError(std::string(what) + ": " + e.what());
    }
    if (q.str() != text) throw SchemaError(std::string(what) + ": '" + text + "' is not in lowest terms");
    return q;
  };
  return {coordinate(j[0]), coordinate(j[1])};
}

inline const ojson& field(const ojson& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

inline Vertex vertex_from(const ojson& j, int n, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  auto v = j.get<long long>();
  if (v < 0 || v >= n) throw SchemaError(std::string(what) + " out of range");
  return static_cast<Vertex>(v);
}

}  // namespace detail

inline constexpr const char* kDocumentFormat = "coseg-representation";

// One top-level key per line and one array element per line, each compact.
inline std::string emit_json(const RepresentationDocument& doc) {
  using detail::ojson;
  const auto& rep = doc.rep;
  std::vector<std::pair<std::string, ojson>> top;
  top.emplace_back("format", kDocumentFormat);
  top.emplace_back("version", 1);
  top.emplace_back("n", rep.tt.original.n());
  ojson graph = ojson::array();
  for (const Edge& e : rep.tt.original.edges()) graph.push_back({e.u, e.v});
  top.emplace_back("graph_edges", std::move(graph));
  ojson tree = ojson::array();
  for (const Edge& e : rep.tt.completed.edges())
    tree.push_back(ojson{{"u", e.u}, {"v", e.v}, {"fill", rep.tt.fill_edges.count(e) > 0}});
  top.emplace_back("two_tree_edges", std::move(tree));
  ojson segs = ojson::array();
  for (const auto& [v, s] : rep.segments)
    segs.push_back(ojson{{"vertex", v}, {"a", detail::point_json(s.a())}, {"b", detail::point_json(s.b())}});
  top.emplace_back("segments", std::move(segs));
  ojson rays = ojson::array();
  for (const auto& [e, r] : rep.special_rays)
    rays.push_back(ojson{{"u", e.u},
                         {"v", e.v},
                         {"start", detail::point_json(r.start())},
                         {"through", detail::point_json(r.through())}});
  top.emplace_back("special_rays", std::move(rays));
  ojson meta;
  meta["seed"] = doc.meta.seed ? ojson(*doc.meta.seed) : ojson(nullptr);
  meta["shrink_levels"] = doc.meta.shrink_levels;
  int worst = 0;
  for (int l : doc.meta.shrink_levels) worst = std::max(worst, l);
  meta["max_shrink_level"] = worst;
  meta["max_coordinate_bits"] = doc.meta.max_coordinate_bits;
  top.emplace_back("metadata", std::move(meta));

  std::string out = "{\n";
  for (std::size_t i = 0; i < top.size(); ++i) {
    const auto& [key, value] = top[i];
    out += "  " + ojson(key).dump() + ": ";
    if (value.is_array() && !value.empty() && (value[0].is_object() || key == "graph_edges")) {
      out += "[\n";
      for (std::size_t k = 0; k < value.size(); ++k)
        out += "    " + value[k].dump() + (k + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += i + 1 < top.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

inline std::string emit_json(const CompatibleRepresentation& rep) {
  RepresentationDocument doc{rep, {}};
  doc.meta.max_coordinate_bits = max_coordinate_bits(rep);
  return emit_json(doc);
}

// Structural parse; geometric validity is left to audit_compatibility.
inline RepresentationDocument parse_json(std::string_view text) {
  using detail::field;
  using detail::ojson;
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("document must be a JSON object");
  if (field(j, "format") != kDocumentFormat) throw SchemaError("unknown document format");
  if (field(j, "version") != 1) throw SchemaError("unsupported document version");
  const ojson& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 0 || nj.get<long long>() > 1'000'000)
    throw SchemaError("'n' must be a non-negative integer");
  const int n = nj.get<int>();

  RepresentationDocument doc;
  Graph g(n), gt(n);
  std::set<Edge> fills;
  const ojson& ge = field(j, "graph_edges");
  if (!ge.is_array()) throw SchemaError("'graph_edges' must be an array");
  for (const auto& e : ge) {
    if (!e.is_array() || e.size() != 2) throw SchemaError("graph edge must be a pair");
    Vertex a = detail::vertex_from(e[0], n, "graph edge endpoint");
    Vertex b = detail::vertex_from(e[1], n, "graph edge endpoint");
    if (a == b || !g.add_edge(a, b)) throw SchemaError("graph edges must be distinct non-loops");
  }
  const ojson& te = field(j, "two_tree_edges");
  if (!te.is_array()) throw SchemaError("'two_tree_edges' must be an array");
  for (const auto& e : te) {
    if (!e.is_object()) throw SchemaError("2-tree edge must be an object");
    Vertex a = detail::vertex_from(field(e, "u"), n, "2-tree edge endpoint");
    Vertex b = detail::vertex_from(field(e, "v"), n, "2-tree edge endpoint");
    const ojson& fill = field(e, "fill");
    if (!fill.is_boolean()) throw SchemaError("'fill' must be a boolean");
    if (a == b || !gt.add_edge(a, b)) throw SchemaError("2-tree edges must be distinct non-loops");
    if (fill.get<bool>() == g.has_edge(a, b)) throw SchemaError("fill flag disagrees with graph_edges");
    if (fill.get<bool>()) fills.insert(Edge(a, b));
  }
  for (const Edge& e : g.edges())
    if (!gt.has_edge(e)) throw SchemaError("graph edge missing from two_tree_edges");
  doc.rep.tt = TwoTreeCompletion{std::move(g), std::move(gt), std::move(fills)};

  const ojson& segs = field(j, "segments");
  if (!segs.is_array()) throw SchemaError("'segments' must be an array");
  for (const auto& s : segs) {
    if (!s.is_object()) throw SchemaError("segment must be an object");
    Vertex v = detail::vertex_from(field(s, "vertex"), n, "segment vertex");
    Point a = detail::point_from(field(s, "a"), "segment endpoint");
    Point b = detail::point_from(field(s, "b"), "segment endpoint");
    if (a == b) throw SchemaError("segment endpoints coincide");
    if (!doc.rep.segments.emplace(v, Segment(a, b)).second) throw SchemaError("duplicate segment");
  }
  const ojson& rays = field(j, "special_rays");
  if (!rays.is_array()) throw SchemaError("'special_rays' must be an array");
  for (const auto& r : rays) {
    if (!r.is_object()) throw SchemaError("special ray must be an object");
    Vertex a = detail::vertex_from(field(r, "u"), n, "ray vertex");
    Vertex b = detail::vertex_from(field(r, "v"), n, "ray vertex");
    if (a == b) throw SchemaError("special ray on a loop");
    Point s = detail::point_from(field(r, "start"), "ray start");
    Point t = detail::point_from(field(r, "through"), "ray through point");
    if (s == t) throw SchemaError("ray start coincides with its through point");
    if (!doc.rep.special_rays.emplace(Edge(a, b), Ray(s, t)).second) throw SchemaError("duplicate special ray");
  }

  if (auto it = j.find("metadata"); it != j.end()) {
    const ojson& m = *it;
    if (!m.is_object()) throw SchemaError("'metadata' must be an object");
    if (auto s = m.find("seed"); s != m.end() && !s->is_null()) {
      if (!s->is_number_unsigned() && !(s->is_number_integer() && s->get<long long>() >= 0))
        throw SchemaError("seed must be a non-negative integer");
      doc.meta.seed = s->get<std::uint64_t>();
    }
    if (auto s = m.find("shrink_levels"); s != m.end()) {
      if (!s->is_array()) throw SchemaError("shrink_levels must be an array");
      for (const auto& l : *s) {
        if (!l.is_number_integer()) throw SchemaError("shrink level must be an integer");
        doc.meta.shrink_levels.push_back(l.get<int>());
      }
    }
    if (auto s = m.find("max_coordinate_bits"); s != m.end()) {
      if (!s->is_number_unsigned()) throw SchemaError("max_coordinate_bits must be a non-negative integer");
      doc.meta.max_coordinate_bits = s->get<std::size_t>();
    }
  }
  return doc;
}

}  // namespace coseg
