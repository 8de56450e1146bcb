#include "spacecross/graph.hpp"

#include <algorithm>

namespace spacecross {

using nlohmann::json;

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ValidationError("negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& e : edges) add_edge(e.u, e.v);
}

int Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
  if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw ValidationError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  edges_.push_back({u, v});
  keys_.insert(key(u, v));
  return static_cast<int>(edges_.size()) - 1;
}

bool Graph::has_edge(int u, int v) const { return keys_.count(key(u, v)) > 0; }

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<Point3> SpatialDrawing::chain(int e) const {
  const Edge& ed = graph.edges()[e];
  std::vector<Point3> pts;
  pts.reserve(bends[e].size() + 2);
  pts.push_back(positions[ed.u]);
  pts.insert(pts.end(), bends[e].begin(), bends[e].end());
  pts.push_back(positions[ed.v]);
  return pts;
}

std::vector<Segment3> SpatialDrawing::segments(int e) const {
  auto pts = chain(e);
  std::vector<Segment3> segs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({pts[i], pts[i + 1]});
  return segs;
}

bool SpatialDrawing::straight() const {
  return std::all_of(bends.begin(), bends.end(), [](const auto& b) { return b.empty(); });
}

void SpatialDrawing::validate() const {
  if (positions.size() != static_cast<std::size_t>(graph.n()))
    throw ValidationError("expected " + std::to_string(graph.n()) + " positions");
  if (bends.size() != graph.m()) throw ValidationError("expected one polyline per edge");
  for (std::size_t e = 0; e < graph.m(); ++e) {
    auto pts = chain(static_cast<int>(e));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i] == pts[i + 1])
        throw ValidationError("edges[" + std::to_string(e) + "]: repeated point " + to_string(pts[i]));
  }
}

SpatialDrawing straight_drawing(Graph g, std::vector<Point3> positions) {
  SpatialDrawing d;
  d.bends.assign(g.m(), {});
  d.graph = std::move(g);
  d.positions = std::move(positions);
  d.validate();
  return d;
}

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ValidationError(where + ": expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

json point_to_json(const Point3& p) { return json::array({to_string(p.x), to_string(p.y), to_string(p.z)}); }

Point3 point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw ValidationError(where + ": expected three coordinates");
  return {rational_from_json(j[0], where + "[0]"), rational_from_json(j[1], where + "[1]"),
          rational_from_json(j[2], where + "[2]")};
}

json quadext_to_json(const QuadExt& q) {
  return {{"a", to_string(q.a())}, {"b", to_string(q.b())}, {"d", to_string(q.d())}};
}

json line_to_json(const AlgebraicLine& l) {
  json dir = json::array(), mom = json::array();
  for (int i = 0; i < 3; ++i) {
    dir.push_back(quadext_to_json(l.dir[i]));
    mom.push_back(quadext_to_json(l.mom[i]));
  }
  return {{"direction", dir}, {"moment", mom}};
}

json drawing_to_json(const SpatialDrawing& d) {
  json verts = json::array();
  for (int i = 0; i < d.graph.n(); ++i) verts.push_back({{"id", i}, {"pos", point_to_json(d.positions[i])}});
  json edges = json::array();
  for (std::size_t e = 0; e < d.graph.m(); ++e) {
    const Edge& ed = d.graph.edges()[e];
    json poly = json::array();
    if (!d.bends[e].empty())
      for (const auto& p : d.chain(static_cast<int>(e))) poly.push_back(point_to_json(p));
    edges.push_back({{"u", ed.u}, {"v", ed.v}, {"polyline", poly}});
  }
  return {{"n", d.graph.n()}, {"vertices", verts}, {"edges", edges}};
}

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw ValidationError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

}  // namespace

SpatialDrawing drawing_from_json(const json& j) {
  int n = int_field(j, "n", "document");
  if (n < 0) throw ValidationError("document.n: negative");
  const json& verts = field(j, "vertices", "document");
  if (!verts.is_array() || verts.size() != static_cast<std::size_t>(n))
    throw ValidationError("document.vertices: expected " + std::to_string(n) + " entries");
  SpatialDrawing d;
  d.graph = Graph(n);
  d.positions.assign(n, Point3{});
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::string where = "vertices[" + std::to_string(i) + "]";
    int id = int_field(verts[i], "id", where);
    if (id < 0 || id >= n || seen[id]) throw ValidationError(where + ".id: invalid or repeated");
    seen[id] = true;
    d.positions[id] = point_from_json(field(verts[i], "pos", where), where + ".pos");
  }
  const json& edges = field(j, "edges", "document");
  if (!edges.is_array()) throw ValidationError("document.edges: expected an array");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::string where = "edges[" + std::to_string(e) + "]";
    int u = int_field(edges[e], "u", where);
    int v = int_field(edges[e], "v", where);
    try {
      d.graph.add_edge(u, v);
    } catch (const ValidationError& err) {
      throw ValidationError(where + ": " + err.what());
    }
    std::vector<Point3> bends;
    if (edges[e].contains("polyline")) {
      const json& poly = edges[e].at("polyline");
      if (!poly.is_array()) throw ValidationError(where + ".polyline: expected an array");
      if (!poly.empty()) {
        if (poly.size() < 2) throw ValidationError(where + ".polyline: needs both endpoints");
        std::vector<Point3> pts;
        for (std::size_t k = 0; k < poly.size(); ++k)
          pts.push_back(point_from_json(poly[k], where + ".polyline[" + std::to_string(k) + "]"));
        if (!(pts.front() == d.positions[u]) || !(pts.back() == d.positions[v]))
          throw ValidationError(where + ".polyline: endpoints do not match vertex positions");
        bends.assign(pts.begin() + 1, pts.end() - 1);
      }
    }
    d.bends.push_back(std::move(bends));
  }
  d.validate();
  return d;
}

std::string encode_drawing(const SpatialDrawing& d) { return drawing_to_json(d).dump(2) + "\n"; }

SpatialDrawing decode_drawing(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return drawing_from_json(j);
}

}  // namespace spacecross
