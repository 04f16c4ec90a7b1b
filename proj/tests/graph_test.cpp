#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "essspec/errors.hpp"
#include "essspec/graph.hpp"
#include "test_support.hpp"

namespace essspec {
namespace {

using testing::adjacency;

std::set<std::uint64_t> block_set(const ComponentPartition& p) {
  std::set<std::uint64_t> out;
  for (VertexSet b : p.blocks) {
    std::uint64_t bits = 0;
    for (Vertex v : b) bits |= std::uint64_t{1} << v;
    out.insert(bits);
  }
  return out;
}

TEST(VertexSet, IteratesInIncreasingOrder) {
  VertexSet s;
  s.insert(9);
  s.insert(2);
  s.insert(63);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{2, 9, 63}));
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.lowest(), 2);
  s.erase(2);
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(VertexSet::first(64).size(), 64);
}

TEST(VertexSet, LexicographicOrder) {
  EXPECT_TRUE(lexicographically_less(VertexSet(0b011), VertexSet(0b101)));
  EXPECT_TRUE(lexicographically_less(VertexSet(0b001), VertexSet(0b011)));
  EXPECT_FALSE(lexicographically_less(VertexSet(0b110), VertexSet(0b101)));
}

TEST(Graph, CompleteGraphs) {
  EXPECT_EQ(complete_graph(1).order(), 1);
  EXPECT_EQ(complete_graph(1).edge_count(), 0U);
  EXPECT_EQ(complete_graph(3).edge_count(), 3U);
  EXPECT_EQ(complete_graph(6).edge_count(), 15U);
}

TEST(Graph, RejectsLoopsAndBadOrders) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 3), InvalidArgument);
  EXPECT_THROW(Graph(0), InvalidArgument);
  EXPECT_THROW(Graph(65), InvalidArgument);
}

TEST(Graph, DisjointUnion) {
  const Graph g = disjoint_union(complete_graph(2), complete_graph(2));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(connected_components(g).size(), 2U);
  EXPECT_TRUE(g.has_edge(2, 3));

  const Graph iso = disjoint_union(complete_graph(1), complete_graph(1));
  EXPECT_EQ(iso.order(), 2);
  EXPECT_EQ(iso.edge_count(), 0U);

  EXPECT_EQ(disjoint_union(complete_graph(3), complete_graph(4)).edge_count(), 9U);
}

TEST(Graph, Join) {
  EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
  const Graph g = join(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(2)));
  EXPECT_EQ(g.order(), 6);
  // 1 + 1 + 1 inside the three K_2, plus 2 * 4 across the join.
  EXPECT_EQ(g.edge_count(), 11U);
  for (int s = 1; s <= 4; ++s)
    for (int t = 1; t <= 4; ++t) EXPECT_EQ(join(complete_graph(s), complete_graph(t)), complete_graph(s + t));
}

TEST(Graph, JoinEdgeCountOnRandomPairs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> order(1, 12);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = testing::random_graph(rng, order(rng), density(rng));
    const Graph b = testing::random_graph(rng, order(rng), density(rng));
    const Graph j = join(a, b);
    EXPECT_EQ(j.edge_count(), a.edge_count() + b.edge_count() +
                                  static_cast<std::size_t>(a.order()) * b.order());
  }
}

TEST(Graph, DisjointUnionKeepsOperandComponents) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = testing::random_graph(rng, 1 + trial % 9, 0.3);
    const Graph b = testing::random_graph(rng, 1 + trial % 7, 0.3);
    std::set<std::uint64_t> expected = block_set(connected_components(a));
    for (VertexSet blk : connected_components(b).blocks) {
      std::uint64_t bits = 0;
      for (Vertex v : blk) bits |= std::uint64_t{1} << (v + a.order());
      expected.insert(bits);
    }
    EXPECT_EQ(block_set(connected_components(disjoint_union(a, b))), expected);
  }
}

TEST(Digraph, DirectedJoin) {
  EXPECT_EQ(directed_join(complete_digraph(1), complete_digraph(1)).arc_count(), 2U);
  EXPECT_EQ(directed_join(complete_digraph(2), complete_digraph(2)), complete_digraph(4));
  const Digraph star = directed_join(complete_digraph(1),
                                     disjoint_union(complete_digraph(1), complete_digraph(1)));
  EXPECT_EQ(star.arc_count(), 4U);
  EXPECT_TRUE(is_strongly_connected(star));
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(complete_graph(3)).blocks, std::vector<VertexSet>{VertexSet(0b111)});
  const auto two = connected_components(disjoint_union(complete_graph(2), complete_graph(2)));
  EXPECT_EQ(two.blocks, (std::vector<VertexSet>{VertexSet(0b0011), VertexSet(0b1100)}));
  EXPECT_EQ(two.nontrivial_count(), 2);
  EXPECT_EQ(connected_components(Graph(4)).size(), 4U);
  EXPECT_EQ(connected_components(Graph(4)).nontrivial_count(), 0);
}

TEST(Components, StrongExamples) {
  EXPECT_EQ(strongly_connected_components(complete_digraph(3)).size(), 1U);

  Digraph d = directed_cycle(3);
  Digraph with_tail(4);
  for (auto [u, v] : d.arcs()) with_tail.add_arc(u, v);
  with_tail.add_arc(0, 3);
  EXPECT_EQ(strongly_connected_components(with_tail).blocks,
            (std::vector<VertexSet>{VertexSet(0b0111), VertexSet(0b1000)}));

  Digraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  EXPECT_EQ(strongly_connected_components(path).size(), 3U);
}

TEST(Components, StrongComponentsMatchMutualReachability) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 9;
    const Digraph d = testing::random_digraph(rng, n, 0.25);
    auto sizes = oracle::component_sizes(adjacency(d), 0, true);
    std::vector<int> got;
    for (VertexSet b : strongly_connected_components(d).blocks) got.push_back(b.size());
    std::sort(got.rbegin(), got.rend());
    EXPECT_EQ(got, sizes);
  }
}

TEST(Components, ReverseHasSameStrongComponents) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = testing::random_digraph(rng, 2 + trial % 11, 0.2);
    EXPECT_EQ(block_set(strongly_connected_components(d)),
              block_set(strongly_connected_components(d.reversed())));
  }
}

TEST(Distances, Examples) {
  EXPECT_EQ(bfs_distances(path_graph(3), 0), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(bfs_distances(complete_graph(4), 2), (std::vector<int>{1, 1, 0, 1}));
  Digraph d(2);
  d.add_arc(0, 1);
  EXPECT_EQ(bfs_distances(d, 1), (std::vector<int>{kUnreachable, 0}));
}

TEST(Distances, MatchFloydWarshall) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = testing::random_graph(rng, n, 0.3);
    const Digraph d = testing::random_digraph(rng, n, 0.3);
    const auto fg = oracle::floyd_warshall(adjacency(g));
    const auto fd = oracle::floyd_warshall(adjacency(d));
    for (Vertex s = 0; s < n; ++s) {
      const auto bg = bfs_distances(g, s);
      const auto bd = bfs_distances(d, s);
      for (Vertex t = 0; t < n; ++t) {
        EXPECT_EQ(bg[t], fg[s][t] == oracle::kInf ? kUnreachable : fg[s][t]);
        EXPECT_EQ(bd[t], fd[s][t] == oracle::kInf ? kUnreachable : fd[s][t]);
      }
    }
  }
}

TEST(Distances, SymmetricAndTriangleOnConnectedGraphs) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = testing::random_connected_graph(rng, n);
    std::vector<std::vector<int>> d;
    for (Vertex v = 0; v < n; ++v) d.push_back(bfs_distances(g, v));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        EXPECT_EQ(d[u][v], d[v][u]);
        for (int w = 0; w < n; ++w) EXPECT_LE(d[u][w], d[u][v] + d[v][w]);
      }
  }
}

TEST(Degree, Examples) {
  EXPECT_EQ(min_degree(complete_graph(5)), 4);
  EXPECT_EQ(min_degree(path_graph(4)), 1);
  const Graph g = join(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(2)));
  EXPECT_EQ(min_degree(g), 3);
}

TEST(Graph, RelabelPreservesStructure) {
  std::mt19937_64 rng(17);
  const Graph g = testing::random_graph(rng, 9, 0.4);
  const auto perm = testing::random_permutation(rng, 9);
  const Graph h = g.relabeled(perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(perm[u], perm[v]));
}

}  // namespace
}  // namespace essspec
