#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "essspec/vertex_set.hpp"

namespace essspec {

using Edge = std::pair<Vertex, Vertex>;
/// Ordered pair (tail, head).
using Arc = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, one adjacency bitset per row.
class Graph {
 public:
  /// Edgeless graph on n vertices; 1 <= n <= kMaxVertices.
  explicit Graph(int n);

  /// Adopts adjacency rows after checking symmetry, loops and range.
  static Graph from_rows(std::vector<VertexSet> rows);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;

  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::first(order()); }
  std::span<const VertexSet> rows() const { return adj_; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges (u, v) with u < v in row-major order.
  std::vector<Edge> edges() const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<VertexSet> adj_;
};

/// Simple directed graph without loops; stores out- and in-neighbour rows.
class Digraph {
 public:
  explicit Digraph(int n);

  static Digraph from_arcs(int n, std::span<const Arc> arcs);
  /// Both orientations of every edge of g.
  static Digraph symmetric_closure(const Graph& g);

  int order() const { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const;

  bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }
  VertexSet out_neighbors(Vertex v) const { return out_[v]; }
  VertexSet in_neighbors(Vertex v) const { return in_[v]; }
  VertexSet vertices() const { return VertexSet::first(order()); }

  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);

  std::vector<Arc> arcs() const;
  Digraph reversed() const;
  Digraph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Digraph& o) const { return out_ == o.out_; }

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Disjoint vertex blocks covering a vertex set, ordered by smallest member.
struct ComponentPartition {
  std::vector<VertexSet> blocks;

  std::size_t size() const { return blocks.size(); }
  /// Number of blocks with at least two vertices.
  int nontrivial_count() const;
  bool operator==(const ComponentPartition&) const = default;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star_graph(int leaves);

/// Vertices of g2 are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// disjoint_union plus every edge between the two sides.
Graph join(const Graph& g1, const Graph& g2);

Digraph complete_digraph(int n);
Digraph directed_cycle(int n);
Digraph disjoint_union(const Digraph& d1, const Digraph& d2);
/// disjoint_union plus both arcs between every cross pair.
Digraph directed_join(const Digraph& d1, const Digraph& d2);

ComponentPartition connected_components(const Graph& g);
/// Components of the subgraph induced by `alive`.
ComponentPartition connected_components(const Graph& g, VertexSet alive);
bool is_connected(const Graph& g);

ComponentPartition strongly_connected_components(const Digraph& d);
ComponentPartition strongly_connected_components(const Digraph& d,
                                                 VertexSet alive);
bool is_strongly_connected(const Digraph& d);

/// Vertices reachable from `source` inside `alive` (source included).
VertexSet reachable_from(const Graph& g, Vertex source, VertexSet alive);
VertexSet reachable_from(const Digraph& d, Vertex source, VertexSet alive);
VertexSet reaching_to(const Digraph& d, Vertex target, VertexSet alive);

/// Marks vertices with no path from the source in bfs_distances rows.
inline constexpr int kUnreachable = -1;

std::vector<int> bfs_distances(const Graph& g, Vertex source);
std::vector<int> bfs_distances(const Digraph& d, Vertex source);

int min_degree(const Graph& g);

}  // namespace essspec
