#include "spacecross/generators.hpp"
#include "spacecross/pipeline.hpp"
#include "spacecross/transversal.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace spacecross;

namespace {

Graph complete_graph(int n, int offset = 0, int total = -1) {
  Graph g(total < 0 ? n : total);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(offset + i, offset + j);
  return g;
}

std::set<std::pair<int, int>> edge_set(const SubdivisionEmbedding& s) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : s.paths)
    for (std::size_t q = 0; q + 1 < p.size(); ++q) out.insert(std::minmax(p[q], p[q + 1]));
  return out;
}

}  // namespace

TEST(Bisection, IntegerBoundMatchesRealFormula) {
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t m = 0; m <= 60; m += 3)
      for (std::int64_t e = 0; e <= m; ++e) {
        const double bound = m / 4.0 - std::sqrt(static_cast<double>(n * m));
        if (std::fabs(e - bound) < 1e-9) continue;
        EXPECT_EQ(meets_bisection_bound(e, n, m), e >= bound) << n << " " << m << " " << e;
      }
}

TEST(Bisection, EdgelessAndSmallGraphsSucceedAtOnce) {
  const auto b = random_bisection(Graph(10), 1);
  EXPECT_EQ(b.retries, 1);
  EXPECT_EQ(b.e1 + b.e2, 0);
  const auto k8 = random_bisection(complete_graph(8), 2);
  EXPECT_EQ(k8.retries, 1);
}

TEST(Bisection, RandomGraphsMeetTheBound) {
  double total = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = random_graph_nm(200, 4000, 1000 + s);
    const auto b = random_bisection(g, s);
    std::int64_t e1 = 0, e2 = 0;
    for (const auto& e : g.edges())
      if (b.side[e.u] == b.side[e.v]) (b.side[e.u] == 0 ? e1 : e2)++;
    EXPECT_EQ(e1, b.e1);
    EXPECT_EQ(e2, b.e2);
    EXPECT_TRUE(meets_bisection_bound(e1, 200, 4000));
    EXPECT_TRUE(meets_bisection_bound(e2, 200, 4000));
    total += b.retries;
  }
  EXPECT_LE(total / 100, 2.0);
}

TEST(Bisection, InducedSubgraphKeepsInsideEdges) {
  const Graph g = complete_graph(5);
  std::vector<int> ids;
  const Graph h = induced_subgraph(g, {0, 1, 0, 1, 0}, 0, &ids);
  EXPECT_EQ(ids, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(h.m(), 3u);
}

TEST(FindK6, CompleteGraphIsItsOwnSubdivision) {
  const auto s = find_k6_subdivision(complete_graph(6), 10000, 1);
  ASSERT_TRUE(s.has_value());
  for (const auto& p : s->paths) EXPECT_EQ(p.size(), 2u);
}

TEST(FindK6, K7ContainsK6) {
  const Graph g = complete_graph(7);
  const auto s = find_k6_subdivision(g, 10000, 2);
  ASSERT_TRUE(s.has_value());
  EXPECT_NO_THROW(s->validate(g));
}

TEST(FindK6, TreesHaveNone) {
  Graph star(20);
  for (int v = 1; v < 20; ++v) star.add_edge(0, v);
  EXPECT_FALSE(find_k6_subdivision(star, 100000, 3).has_value());
  Graph path(30);
  for (int v = 1; v < 30; ++v) path.add_edge(v - 1, v);
  EXPECT_FALSE(find_k6_subdivision(path, 100000, 3).has_value());
}

TEST(FindK6, SubdividedK6NeedsLongPaths) {
  // K6 with every edge replaced by a path of length 3
  Graph g(6 + 30);
  int next = 6;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      g.add_edge(i, next);
      g.add_edge(next, next + 1);
      g.add_edge(next + 1, j);
      next += 2;
    }
  const auto s = find_k6_subdivision(g, 1000000, 4);
  ASSERT_TRUE(s.has_value());
  for (const auto& p : s->paths) EXPECT_EQ(p.size(), 4u);
}

TEST(ExtractSubdivisions, TwoDisjointCopies) {
  Graph g(12);
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) g.add_edge(6 * c + i, 6 * c + j);
  EXPECT_EQ(extract_disjoint_subdivisions(g, 100000, 5).size(), 2u);
  EXPECT_EQ(extract_disjoint_subdivisions(complete_graph(6), 100000, 5).size(), 1u);
}

TEST(ExtractSubdivisions, RandomDenseGraphGivesEdgeDisjointResults) {
  const Graph g = erdos_renyi(40, 0.5, 6);
  const auto subs = extract_disjoint_subdivisions(g, 200000, 7);
  ASSERT_GE(subs.size(), 1u);
  std::set<std::pair<int, int>> used;
  for (const auto& s : subs) {
    EXPECT_NO_THROW(s.validate(g));
    for (const auto& e : edge_set(s)) EXPECT_TRUE(used.insert(e).second);
  }
}

TEST(BoostPipeline, TwoCopiesPerSide) {
  const auto fx = disjoint_k6_fixture(2, 8);
  BoostOptions opt;
  opt.seed = 9;
  opt.sides = fx.sides;
  const auto rep = boost_witness_pipeline(fx.drawing, opt);
  EXPECT_EQ(rep.subdivisions[0].size(), 2u);
  EXPECT_EQ(rep.subdivisions[1].size(), 2u);
  EXPECT_EQ(rep.pairs_searched, 4);
  EXPECT_EQ(rep.lemma_violations, 0);
  ASSERT_GE(rep.witnesses.size(), 1u);
  std::set<std::vector<int>> seen;
  for (const auto& w : rep.witnesses) {
    EXPECT_TRUE(verify_witness(fx.drawing, w));
    std::vector<Segment3> segs;
    for (int e : w.edges) segs.push_back(fx.drawing.segments(e).front());
    EXPECT_TRUE(transversal_exists_segments(segs).exists);
    EXPECT_TRUE(seen.insert(w.edges).second);
  }
}

TEST(BoostPipeline, TooFewSubdivisionsGiveNothing) {
  const auto fx = disjoint_k6_fixture(1, 10);
  std::vector<int> sides(fx.sides.size(), 0);  // everything on one side
  BoostOptions opt;
  opt.sides = sides;
  const auto rep = boost_witness_pipeline(fx.drawing, opt);
  EXPECT_TRUE(rep.witnesses.empty());
  const auto sparse = random_spatial_drawing(12, 15, 64, 11);
  EXPECT_TRUE(boost_witness_pipeline(sparse, {}).witnesses.empty());
}

TEST(HexGrid, StructureAndChord) {
  for (int k = 1; k <= 3; ++k) {
    const auto h = hexgrid_construction(k, 2);
    const Graph& g = h.planar.graph;
    for (int d : g.degrees()) EXPECT_EQ(d, 3);
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(is_planar(g));
    EXPECT_TRUE(is_3_connected(g));
    EXPECT_EQ(count_planar_crossings(h.planar), 0);
    // Euler's formula on the traced faces
    EXPECT_EQ(static_cast<long>(planar_faces(h.planar).size()), static_cast<long>(g.m()) - g.n() + 2);
    EXPECT_NE(h.special_edge.u, h.special_edge.v);
    EXPECT_FALSE(g.has_edge(h.special_edge.u, h.special_edge.v));
    EXPECT_GE(h.face_distance, (h.rows + 3) / 4);
    EXPECT_EQ(h.graph.m(), g.m() + 1);
    EXPECT_TRUE(h.drawing.bends.back().empty());
  }
}

TEST(HexGrid, RejectsBadParameters) {
  EXPECT_THROW(hexgrid_construction(0, 8), ValidationError);
  EXPECT_THROW(hexgrid_construction(1, 0), ValidationError);
}

TEST(HexGrid, PlanarityDetectsK5AndK33) {
  EXPECT_FALSE(is_planar(complete_graph(5)));
  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  EXPECT_FALSE(is_planar(k33));
  EXPECT_TRUE(is_planar(complete_graph(4)));
}

TEST(HexGrid, SmallestGridHasNoSpaceCrossing) {
  const auto h = hexgrid_construction(1, 2);
  EXPECT_EQ(count_line_crossings(h.drawing).count, 0);
}
