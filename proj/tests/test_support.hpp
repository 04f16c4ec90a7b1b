#pragma once

#include <cstdint>
#include <random>

#include "essspec/graph.hpp"
#include "oracles/oracles.hpp"

namespace essspec::testing {

inline oracle::Matrix adjacency(const Graph& g) {
  const int n = g.order();
  oracle::Matrix a(n, std::vector<int>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) a[u][v] = 1;
  return a;
}

inline oracle::Matrix adjacency(const Digraph& d) {
  const int n = d.order();
  oracle::Matrix a(n, std::vector<int>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : d.out_neighbors(u)) a[u][v] = 1;
  return a;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Digraph random_digraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

/// Rejection-samples until connected; n >= 1.
inline Graph random_connected_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> density(0.25, 0.9);
  for (;;) {
    Graph g = random_graph(rng, n, density(rng));
    if (is_connected(g)) return g;
  }
}

inline Digraph random_strong_digraph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> density(0.3, 0.9);
  for (;;) {
    Digraph d = random_digraph(rng, n, density(rng));
    if (is_strongly_connected(d)) return d;
  }
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace essspec::testing
