#pragma once

#include "spacecross/geometry.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace spacecross {

struct Edge {
  int u = 0;
  int v = 0;
  bool touches(const Edge& o) const { return u == o.u || u == o.v || v == o.u || v == o.v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph; the edge id is the index into `edges`.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}
  /// Validates simplicity and vertex ranges.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t m() const { return edges_.size(); }

  /// Appends {u, v}; throws ValidationError on loops, duplicates or bad ids.
  int add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;

 private:
  static std::uint64_t key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }
  int n_ = 0;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> keys_;
};

/// Straight-line or polyline drawing in R^3. `bends[e]` holds the interior
/// points of edge e in order from edges()[e].u to edges()[e].v.
struct SpatialDrawing {
  Graph graph;
  std::vector<Point3> positions;
  std::vector<std::vector<Point3>> bends;

  /// Full chain u, bends..., v of edge e.
  std::vector<Point3> chain(int e) const;
  std::vector<Segment3> segments(int e) const;
  bool straight() const;
  /// Throws ValidationError on size mismatches or repeated consecutive points.
  void validate() const;
};

SpatialDrawing straight_drawing(Graph g, std::vector<Point3> positions);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json point_to_json(const Point3& p);
Point3 point_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json quadext_to_json(const QuadExt& q);
nlohmann::json line_to_json(const AlgebraicLine& l);

nlohmann::json drawing_to_json(const SpatialDrawing& d);
SpatialDrawing drawing_from_json(const nlohmann::json& j);
std::string encode_drawing(const SpatialDrawing& d);
SpatialDrawing decode_drawing(const std::string& text);

}  // namespace spacecross
