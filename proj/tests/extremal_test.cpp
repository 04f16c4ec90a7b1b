#include <gtest/gtest.h>

#include <algorithm>

#include "essspec/connectivity.hpp"
#include "essspec/errors.hpp"
#include "essspec/extremal.hpp"
#include "test_support.hpp"

namespace essspec {
namespace {

using testing::adjacency;

TEST(Theorem1Extremal, Examples) {
  const Graph g = theorem1_extremal(6, 2);
  EXPECT_EQ(g.edge_count(), 11U);
  EXPECT_EQ(g, join(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(2))));
  // The K_2 side has degree 1 + kappa.
  EXPECT_EQ(min_degree(theorem1_extremal(7, 1)), 2);
  EXPECT_EQ(min_degree(theorem1_extremal(7, 3)), 4);
  const auto c = essential_connectivity(theorem1_extremal(7, 3));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 3);
}

TEST(Theorem1Extremal, EssentialConnectivityAndBlocks) {
  for (int kappa = 1; kappa <= 4; ++kappa)
    for (int n = kappa + 4; n <= 9; ++n) {
      const Graph g = theorem1_extremal(n, kappa);
      EXPECT_TRUE(is_connected(g));
      const auto c = essential_connectivity(g);
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(c->size(), kappa);
      EXPECT_EQ(oracle::essential_cut_size(adjacency(g), false), kappa);
      // Removing the join clique leaves K_2 and K_{n-kappa-2}.
      const auto sizes = oracle::component_sizes(adjacency(g), (std::uint64_t{1} << kappa) - 1, false);
      EXPECT_EQ(sizes, (std::vector<int>{std::max(2, n - kappa - 2), std::min(2, n - kappa - 2)}));
    }
}

TEST(Theorem1Extremal, RejectsOutOfRange) {
  EXPECT_THROW(theorem1_extremal(5, 2), InvalidArgument);
  EXPECT_THROW(theorem1_extremal(6, 0), InvalidArgument);
}

TEST(Theorem2Extremal, AttachedVertexExample) {
  const Graph g = theorem2_extremal(7, 2, 2);
  EXPECT_EQ(theorem2_case(2, 2), Theorem2Case::kAttachedVertex);
  const Vertex z = 6;
  EXPECT_EQ(g.degree(z), 2);
  EXPECT_TRUE(g.has_edge(z, 0));
  EXPECT_TRUE(g.has_edge(z, 2));
  EXPECT_FALSE(g.has_edge(z, 1));
  EXPECT_EQ(min_degree(g), 2);
  EXPECT_EQ(oracle::essential_cut_size(adjacency(g), false), 2);
}

TEST(Theorem2Extremal, JoinExample) {
  EXPECT_EQ(theorem2_case(2, 3), Theorem2Case::kJoin);
  const Graph g = theorem2_extremal(7, 2, 3);
  EXPECT_EQ(g, join(complete_graph(2), disjoint_union(complete_graph(3), complete_graph(2))));
}

TEST(Theorem2Extremal, LargerAttachedVertexExample) {
  EXPECT_EQ(theorem2_case(3, 3), Theorem2Case::kAttachedVertex);
  const Graph g = theorem2_extremal(8, 3, 3);
  EXPECT_EQ(g.degree(7), 3);
  EXPECT_EQ(min_degree(g), 3);
}

TEST(Theorem2Extremal, EveryFeasibleTripleIsAudited) {
  int feasible = 0;
  int attached = 0;
  int joined = 0;
  for (int n = 5; n <= 9; ++n)
    for (int kappa = 1; kappa + 4 <= n; ++kappa)
      for (int delta = 1; delta < n; ++delta) {
        try {
          const Graph g = theorem2_extremal(n, kappa, delta);
          ++feasible;
          (theorem2_case(kappa, delta) == Theorem2Case::kJoin ? joined : attached)++;
          EXPECT_EQ(g.order(), n);
          EXPECT_TRUE(is_connected(g));
          const auto adj = adjacency(g);
          int deg = n;
          for (const auto& row : adj) deg = std::min(deg, static_cast<int>(std::count(row.begin(), row.end(), 1)));
          EXPECT_EQ(deg, delta);
          EXPECT_EQ(oracle::essential_cut_size(adj, false), kappa) << n << " " << kappa << " " << delta;
        } catch (const ConstructionInfeasible&) {
        }
      }
  EXPECT_GT(attached, 10);
  EXPECT_GT(joined, 10);
  EXPECT_GT(feasible, attached);
}

TEST(Theorem2Extremal, ReportsInfeasibleParameters) {
  // delta = n - 1 forces a complete graph, which has no essential cut.
  EXPECT_THROW(theorem2_extremal(6, 1, 5), ConstructionInfeasible);
  EXPECT_THROW(theorem2_extremal(6, 1, 0), InvalidArgument);
}

TEST(Theorem3Extremal, ArcCountAndConnectivity) {
  const Digraph d = theorem3_extremal(6, 1, 2);
  EXPECT_EQ(d.arc_count(), 24U);
  EXPECT_TRUE(is_strongly_connected(theorem3_extremal(7, 1, 2)));
  for (int n = 6; n <= 9; ++n)
    for (int k = 1; k <= n - 4; ++k)
      for (int n1 = 2; n1 <= n - k - 2; ++n1) {
        const Digraph g = theorem3_extremal(n, k, n1);
        const int n2 = n - k - n1;
        EXPECT_EQ(g.arc_count(), static_cast<std::size_t>(n1 * (n1 - 1) + n2 * (n2 - 1) + k * (k - 1) +
                                                           2 * k * (n1 + n2) + n1 * n2));
        EXPECT_TRUE(is_strongly_connected(g));
        const auto c = digraph_essential_connectivity(g);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(c->size(), k);
        if (n <= 8) EXPECT_EQ(oracle::essential_cut_size(adjacency(g), true), k);
      }
}

TEST(Theorem3Extremal, ReverseSwapsTheBlocks) {
  for (int n = 6; n <= 10; ++n)
    for (int k = 1; k <= n - 4; ++k)
      for (int n1 = 2; n1 <= n - k - 2; ++n1) {
        const Digraph rev = theorem3_extremal(n, k, n1).reversed();
        const Digraph other = theorem3_extremal(n, k, n - k - n1);
        // Map clique to clique and swap the two blocks.
        std::vector<Vertex> perm(n);
        for (Vertex v = 0; v < k; ++v) perm[v] = v;
        for (Vertex v = k; v < k + n1; ++v) perm[v] = v + (n - k - n1);
        for (Vertex v = k + n1; v < n; ++v) perm[v] = v - n1;
        EXPECT_EQ(rev.relabeled(perm), other);
      }
}

TEST(Theorem3Extremal, RejectsOutOfRange) {
  EXPECT_THROW(theorem3_extremal(6, 1, 1), InvalidArgument);
  EXPECT_THROW(theorem3_extremal(6, 1, 4), InvalidArgument);
  EXPECT_THROW(theorem3_extremal(6, 0, 2), InvalidArgument);
}

TEST(ExtremalSpec, BuildDispatches) {
  EXPECT_EQ(build({Family::kTheorem1, 7, 2, {}, {}}), theorem1_extremal(7, 2));
  EXPECT_EQ(build({Family::kTheorem2, 7, 2, 3, {}}), theorem2_extremal(7, 2, 3));
  EXPECT_THROW(build({Family::kTheorem3, 7, 1, {}, 2}), InvalidArgument);
  EXPECT_THROW((ExtremalSpec{Family::kTheorem2, 7, 2, {}, {}}.validate()), InvalidArgument);
  EXPECT_EQ(to_string(Family::kTheorem2), "thm2");
}

TEST(CliqueJoin, Shapes) {
  const std::vector<int> parts{4, 2};
  EXPECT_EQ(clique_join(1, parts), join(complete_graph(1), disjoint_union(complete_graph(4), complete_graph(2))));
  EXPECT_EQ(clique_join(3, std::vector<int>{}), complete_graph(3));
  EXPECT_THROW(clique_join(0, parts), InvalidArgument);
}

TEST(DiscriminantExcess, Values) {
  EXPECT_EQ(discriminant_excess(2, 10, 2), 84.0);
  EXPECT_EQ(discriminant_excess(2, 10, 2), 12.0 * 10 - 8.0 * 2 - 20);
  EXPECT_EQ(discriminant_excess(6, 10, 2), discriminant_excess(2, 10, 2));
  EXPECT_EQ(discriminant_excess_argmin(12, 3), (std::vector<int>{2, 7}));
  EXPECT_THROW(discriminant_excess(1, 10, 2), InvalidArgument);
}

TEST(DiscriminantExcess, MinimisedOnlyAtEndpoints) {
  for (int k = 1; k <= 10; ++k)
    for (int gap = 5; gap <= 50; ++gap) {
      const int n = gap + k;
      // Brute-force scan with integer arithmetic.
      long long best = 1LL << 62;
      std::vector<int> argmin;
      for (int x = 2; x <= gap - 2; ++x) {
        const long long v = -4LL * x * x + 4LL * gap * x + 4LL * n - 4;
        if (v < best) {
          best = v;
          argmin = {x};
        } else if (v == best) {
          argmin.push_back(x);
        }
      }
      EXPECT_EQ(discriminant_excess_argmin(n, k), argmin);
      EXPECT_EQ(argmin, (std::vector<int>{2, gap - 2}));
      EXPECT_EQ(best, 12LL * n - 8LL * k - 20);
    }
}

}  // namespace
}  // namespace essspec
