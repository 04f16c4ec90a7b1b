#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "essspec/errors.hpp"
#include "essspec/graph.hpp"

namespace essspec {

/// Enumeration above this order is refused unless the caller raises the
/// limit explicitly (n = 9 already means 2^36 masks).
inline constexpr int kDefaultMaxEnumerationOrder = 8;

/// Number of vertex pairs, i.e. bits in an edge mask.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Half-open range of edge masks.
struct MaskRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Edge mask bit b corresponds to the b-th pair in graph6 order:
/// (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_mask(int n, std::uint64_t mask);

/// Splits [0, 2^(n(n-1)/2)) into `parts` contiguous ranges of near-equal size.
std::vector<MaskRange> partition_masks(int n, int parts);

/// Throws InvalidArgument unless 1 <= n <= max_n.
void check_enumeration_order(int n, int max_n = kDefaultMaxEnumerationOrder);

/// Calls fn(graph, mask) for every connected labelled graph whose edge mask
/// lies in `range`, in increasing mask order.
template <typename Fn>
void for_each_connected_graph(int n, MaskRange range, Fn&& fn) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<VertexSet> rows(n);
  const VertexSet all = VertexSet::first(n);
  for (std::uint64_t mask = range.begin; mask < range.end; ++mask) {
    std::fill(rows.begin(), rows.end(), VertexSet{});
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto [u, v] = pairs[std::countr_zero(rest)];
      rows[u].insert(v);
      rows[v].insert(u);
    }
    VertexSet reached = VertexSet::single(0);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= rows[v];
      next -= reached;
      reached |= next;
      frontier = next;
    }
    if (reached != all) continue;
    Graph g(n);
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto [u, v] = pairs[std::countr_zero(rest)];
      g.add_edge(u, v);
    }
    fn(static_cast<const Graph&>(g), mask);
  }
}

/// Every connected labelled graph on n vertices, exactly once.
template <typename Fn>
void enumerate_connected_graphs(int n, Fn&& fn,
                                int max_n = kDefaultMaxEnumerationOrder) {
  check_enumeration_order(n, max_n);
  const MaskRange all{0, std::uint64_t{1} << pair_count(n)};
  for_each_connected_graph(n, all, [&](const Graph& g, std::uint64_t) { fn(g); });
}

/// Parallel count of connected labelled graphs on n vertices.
std::uint64_t count_connected_graphs(int n, int threads = 1,
                                     int max_n = kDefaultMaxEnumerationOrder);

}  // namespace essspec
