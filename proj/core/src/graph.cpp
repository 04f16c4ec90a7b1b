#include "essspec/graph.hpp"

#include <algorithm>
#include <string>

#include "essspec/errors.hpp"

namespace essspec {
namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("vertex count must lie in [1, " +
                          std::to_string(kMaxVertices) + "], got " +
                          std::to_string(n));
  }
}

// Grows `seed` to everything reachable through `step` rows inside `alive`.
VertexSet closure(std::span<const VertexSet> step, VertexSet seed,
                  VertexSet alive) {
  VertexSet reached = seed & alive;
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= step[v];
    next = (next & alive) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

template <typename Rows>
std::vector<int> bfs_rows(const Rows& rows, int n, Vertex source) {
  if (source < 0 || source >= n) {
    throw InvalidArgument("bfs source out of range");
  }
  std::vector<int> dist(n, kUnreachable);
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  dist[source] = 0;
  for (int level = 1; !frontier.empty(); ++level) {
    VertexSet next;
    for (Vertex v : frontier) next |= rows[v];
    next -= seen;
    for (Vertex v : next) dist[v] = level;
    seen |= next;
    frontier = next;
  }
  return dist;
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(n, VertexSet{});
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  const VertexSet all = g.vertices();
  for (int u = 0; u < g.order(); ++u) {
    if (!(rows[u] - all).empty()) throw InvalidArgument("neighbour out of range");
    if (rows[u].contains(u)) throw InvalidArgument("loop at vertex " + std::to_string(u));
    for (Vertex v : rows[u]) {
      if (!rows[v].contains(u)) throw InvalidArgument("adjacency rows are not symmetric");
    }
  }
  g.adj_ = std::move(rows);
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet row : adj_) twice += static_cast<std::size_t>(row.size());
  return twice / 2;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw InvalidArgument("vertex out of range");
  }
  if (u == v) throw InvalidArgument("loops are not allowed");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw InvalidArgument("permutation size mismatch");
  }
  Graph out(order());
  for (Vertex u = 0; u < order(); ++u) {
    VertexSet row;
    for (Vertex v : adj_[u]) row.insert(perm[v]);
    out.adj_[perm[u]] = row;
  }
  return out;
}

// -------------------------------------------------------------- Digraph

Digraph::Digraph(int n) {
  check_order(n);
  out_.assign(n, VertexSet{});
  in_.assign(n, VertexSet{});
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

Digraph Digraph::symmetric_closure(const Graph& g) {
  Digraph d(g.order());
  for (auto [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (VertexSet row : out_) total += static_cast<std::size_t>(row.size());
  return total;
}

void Digraph::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw InvalidArgument("vertex out of range");
  }
  if (u == v) throw InvalidArgument("loops are not allowed");
}

void Digraph::add_arc(Vertex u, Vertex v) {
  check_pair(u, v);
  out_[u].insert(v);
  in_[v].insert(u);
}

void Digraph::remove_arc(Vertex u, Vertex v) {
  check_pair(u, v);
  out_[u].erase(v);
  in_[v].erase(u);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  }
  return out;
}

Digraph Digraph::reversed() const {
  Digraph r(order());
  r.out_ = in_;
  r.in_ = out_;
  return r;
}

Digraph Digraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw InvalidArgument("permutation size mismatch");
  }
  Digraph out(order());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) out.add_arc(perm[u], perm[v]);
  }
  return out;
}

int ComponentPartition::nontrivial_count() const {
  return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                        [](VertexSet b) { return b.size() >= 2; }));
}

// --------------------------------------------------------- constructors

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const int n1 = g1.order();
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = n1; v < g.order(); ++v) g.add_edge(u, v);
  }
  return g;
}

Digraph complete_digraph(int n) {
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) d.add_arc(u, v);
    }
  }
  return d;
}

Digraph directed_cycle(int n) {
  if (n < 2) throw InvalidArgument("directed cycle needs at least 2 vertices");
  Digraph d(n);
  for (Vertex v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

Digraph disjoint_union(const Digraph& d1, const Digraph& d2) {
  const int n1 = d1.order();
  Digraph d(n1 + d2.order());
  for (auto [u, v] : d1.arcs()) d.add_arc(u, v);
  for (auto [u, v] : d2.arcs()) d.add_arc(u + n1, v + n1);
  return d;
}

Digraph directed_join(const Digraph& d1, const Digraph& d2) {
  Digraph d = disjoint_union(d1, d2);
  const int n1 = d1.order();
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = n1; v < d.order(); ++v) {
      d.add_arc(u, v);
      d.add_arc(v, u);
    }
  }
  return d;
}

// ----------------------------------------------------------- traversals

VertexSet reachable_from(const Graph& g, Vertex source, VertexSet alive) {
  return closure(g.rows(), VertexSet::single(source), alive);
}

VertexSet reachable_from(const Digraph& d, Vertex source, VertexSet alive) {
  VertexSet reached = VertexSet::single(source) & alive;
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= d.out_neighbors(v);
    next = (next & alive) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

VertexSet reaching_to(const Digraph& d, Vertex target, VertexSet alive) {
  return reachable_from(d.reversed(), target, alive);
}

ComponentPartition connected_components(const Graph& g, VertexSet alive) {
  ComponentPartition part;
  VertexSet rest = alive & g.vertices();
  while (!rest.empty()) {
    VertexSet block = reachable_from(g, rest.lowest(), rest);
    part.blocks.push_back(block);
    rest -= block;
  }
  return part;
}

ComponentPartition connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g) {
  return reachable_from(g, 0, g.vertices()) == g.vertices();
}

ComponentPartition strongly_connected_components(const Digraph& d,
                                                 VertexSet alive) {
  const Digraph rev = d.reversed();
  ComponentPartition part;
  VertexSet rest = alive & d.vertices();
  while (!rest.empty()) {
    const Vertex v = rest.lowest();
    VertexSet block = reachable_from(d, v, rest) & reachable_from(rev, v, rest);
    part.blocks.push_back(block);
    rest -= block;
  }
  // Blocks are discovered in order of their smallest vertex already.
  return part;
}

ComponentPartition strongly_connected_components(const Digraph& d) {
  return strongly_connected_components(d, d.vertices());
}

bool is_strongly_connected(const Digraph& d) {
  const VertexSet all = d.vertices();
  return reachable_from(d, 0, all) == all &&
         reachable_from(d.reversed(), 0, all) == all;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_rows(g.rows(), g.order(), source);
}

std::vector<int> bfs_distances(const Digraph& d, Vertex source) {
  std::vector<VertexSet> rows(d.order());
  for (Vertex v = 0; v < d.order(); ++v) rows[v] = d.out_neighbors(v);
  return bfs_rows(rows, d.order(), source);
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

}  // namespace essspec
