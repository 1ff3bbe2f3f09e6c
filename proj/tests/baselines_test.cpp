#include <gtest/gtest.h>

#include "rstep/baselines.hpp"
#include "rstep/generators.hpp"
#include "support.hpp"

using namespace rstep;
using namespace rstep::testing;

namespace {
const std::vector<Weight> kPathDist{0, 2, 5};
}

TEST(Dijkstra, Examples) {
  EXPECT_EQ(dijkstra(small_path(), 0).dist, kPathDist);
  const Graph iso = make_graph(4, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(dijkstra(iso, 0).dist[3], kInfinity);
  EXPECT_EQ(dijkstra(small_triangle(), 0).dist[1], 2u);
}

TEST(BellmanFord, Examples) {
  EXPECT_EQ(bellman_ford(small_path(), 0).dist, kPathDist);
  const Graph iso = make_graph(4, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(bellman_ford(iso, 0).dist[3], kInfinity);
  EXPECT_EQ(bellman_ford(small_triangle(), 0).dist[1], 2u);
}

TEST(Baselines, AgreeOnRandomGraphs) {
  const auto corpus = random_corpus(100, 2, 120, 500, 100, 17);
  for (const auto& c : corpus) {
    const auto ref = dijkstra(c.graph, c.source);
    EXPECT_EQ(bellman_ford(c.graph, c.source), ref) << "seed " << c.seed;
    for (Weight delta : {Weight{1}, Weight{7}, Weight{50}, Weight{1000}}) {
      EXPECT_EQ(delta_stepping(c.graph, c.source, delta).dist, ref) << "seed " << c.seed << " delta " << delta;
    }
    // the layered oracle is independent of all three
    EXPECT_EQ(oracle_hop_distances(c.graph, c.source).dist, ref.dist);
  }
}

TEST(Bfs, MatchesDijkstraOnUnitWeights) {
  const auto corpus = random_corpus(30, 2, 80, 300, 1, 5);
  for (const auto& c : corpus) {
    EXPECT_EQ(bfs(c.graph, c.source).hops.dist, dijkstra(c.graph, c.source).dist);
  }
}

TEST(Bfs, RoundsExamples) {
  EXPECT_EQ(bfs(generate({Grid2d{3, 3}}).graph, 0).rounds, 4u);
  EXPECT_EQ(bfs(Graph::from_edges(1, std::vector<WeightedEdge>{}), 0).rounds, 0u);
  const Graph path5 = make_graph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  EXPECT_EQ(bfs(path5, 2).rounds, 2u);
}

TEST(Bfs, ScanCounterOnStar) {
  // centre first, then each tip; the centre scans all four edges
  const Graph star = make_graph(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  const auto res = bfs(star, 0);
  ASSERT_EQ(res.settle_order.size(), 5u);
  EXPECT_EQ(res.scanned_before, (std::vector<std::size_t>{0, 4, 5, 6, 7}));
}

TEST(DeltaStepping, PathWithUnitDelta) {
  const Graph path = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
  const auto res = delta_stepping(path, 0, 1);
  EXPECT_EQ(res.steps, 2u);
  EXPECT_EQ(res.dist.dist, (std::vector<Weight>{0, 1, 2}));
}

TEST(DeltaStepping, HugeDeltaIsOneBucket) {
  const auto corpus = random_corpus(20, 3, 60, 200, 100, 23);
  for (const auto& c : corpus) {
    const Weight big = c.graph.vertex_count() * c.graph.max_weight();
    const auto res = delta_stepping(c.graph, c.source, big);
    EXPECT_EQ(res.steps, 1u);
    EXPECT_EQ(res.dist, dijkstra(c.graph, c.source));
  }
}

TEST(HopMatrix, TriangleUsesFewestHopsOnLightestPath) {
  const auto hm = hop_matrix(small_triangle());
  EXPECT_EQ(hm.distance(0, 1), 2u);
  EXPECT_EQ(hm.hops(0, 1), 2u);
  EXPECT_EQ(hm.hops(0, 2), 1u);
  EXPECT_EQ(hm.hops(1, 1), 0u);
}

TEST(HopMatrix, MatchesLayeredOracle) {
  const auto corpus = random_corpus(25, 2, 30, 80, 5, 31);
  for (const auto& c : corpus) {
    const auto hm = hop_matrix(c.graph);
    for (Vertex u = 0; u < c.graph.vertex_count(); ++u) {
      const auto o = oracle_hop_distances(c.graph, u);
      for (Vertex v = 0; v < c.graph.vertex_count(); ++v) {
        ASSERT_EQ(hm.distance(u, v), o.dist[v]);
        ASSERT_EQ(hm.hops(u, v), o.hops[v]);
      }
    }
  }
}

TEST(KRadius, Examples) {
  EXPECT_EQ(k_radius_bruteforce(small_path(), 1)[0], 5u);
  for (std::size_t k : {1, 2, 3}) {
    for (Weight r : k_radius_bruteforce(complete_graph(6), k)) EXPECT_EQ(r, kInfinity);
  }
}

TEST(KRadius, AntitoneInK) {
  const auto corpus = random_corpus(20, 2, 40, 120, 20, 41);
  for (const auto& c : corpus) {
    auto prev = k_radius_bruteforce(c.graph, 1);
    for (std::size_t k = 2; k <= 5; ++k) {
      const auto cur = k_radius_bruteforce(c.graph, k);
      for (std::size_t v = 0; v < cur.size(); ++v) EXPECT_GE(cur[v], prev[v]);
      prev = cur;
    }
  }
}

TEST(KRadius, CapRaisesSizeError) {
  const Graph g = generate({Grid2d{30, 30}}).graph;
  EXPECT_THROW(hop_matrix(g), SizeError);
  EXPECT_THROW(k_radius_bruteforce(g, 1, OracleLimits{100}), SizeError);
  EXPECT_NO_THROW(k_radius_bruteforce(generate({Grid2d{5, 5}}).graph, 1, OracleLimits{25}));
}
