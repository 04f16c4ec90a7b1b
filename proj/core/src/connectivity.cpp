#include "essspec/connectivity.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>

#include "essspec/errors.hpp"

namespace essspec {
namespace {

// Unit vertex capacities: vertex v becomes v_in = 2v -> v_out = 2v+1.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(const Graph& g)
      : n_(2 * g.order()), cap_(static_cast<std::size_t>(n_) * n_, 0) {
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.neighbors(v)) cap(out(v), in(w)) = kBig;
    }
  }

  // Maximum number of internally vertex-disjoint s-t paths.
  int max_flow(Vertex s, Vertex t) {
    std::vector<int> residual = cap_;
    const int order = n_ / 2;
    for (Vertex v = 0; v < order; ++v) {
      residual[index(in(v), out(v))] = (v == s || v == t) ? kBig : 1;
    }
    const int source = out(s);
    const int sink = in(t);
    int flow = 0;
    std::vector<int> parent(n_);
    for (;;) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source] = source;
      std::queue<int> queue;
      queue.push(source);
      while (!queue.empty() && parent[sink] < 0) {
        const int u = queue.front();
        queue.pop();
        for (int w = 0; w < n_; ++w) {
          if (parent[w] < 0 && residual[index(u, w)] > 0) {
            parent[w] = u;
            queue.push(w);
          }
        }
      }
      if (parent[sink] < 0) return flow;
      for (int w = sink; w != source; w = parent[w]) {
        --residual[index(parent[w], w)];
        ++residual[index(w, parent[w])];
      }
      ++flow;
    }
  }

 private:
  static constexpr int kBig = 1 << 20;
  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
  int& cap(int a, int b) { return cap_[index(a, b)]; }

  int n_;
  std::vector<int> cap_;
};

// True if removing `cut` leaves at least two connected pieces of size >= 2.
bool leaves_two_nontrivial(const Graph& g, VertexSet alive) {
  int found = 0;
  while (alive.size() >= 2) {
    VertexSet block = reachable_from(g, alive.lowest(), alive);
    if (block.size() >= 2 && ++found == 2) return true;
    alive -= block;
  }
  return false;
}

bool leaves_two_nontrivial(const Digraph& d, const Digraph& rev, VertexSet alive) {
  int found = 0;
  while (alive.size() >= 2) {
    const Vertex v = alive.lowest();
    VertexSet block = reachable_from(d, v, alive) & reachable_from(rev, v, alive);
    if (block.size() >= 2 && ++found == 2) return true;
    alive -= block;
  }
  return false;
}

// Visits size-k subsets of {0..n-1} in lexicographic order of their sorted
// member lists; stops at the first one accepted by `test`.
template <typename Test>
std::optional<VertexSet> first_subset(int n, int k, Test&& test) {
  std::array<int, kMaxVertices> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    VertexSet s;
    for (int i = 0; i < k; ++i) s.insert(idx[i]);
    if (test(s)) return s;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <typename Splits>
std::optional<VertexSet> minimum_essential_cut(int n, Splits&& splits) {
  const VertexSet all = VertexSet::first(n);
  // Two non-trivial pieces need four surviving vertices.
  for (int k = 0; k + 4 <= n; ++k) {
    auto cut = first_subset(n, k, [&](VertexSet s) { return splits(all - s); });
    if (cut) return cut;
  }
  return std::nullopt;
}

std::optional<VertexSet> minimum_essential_cut(const Graph& g) {
  return minimum_essential_cut(g.order(), [&](VertexSet alive) {
    return leaves_two_nontrivial(g, alive);
  });
}

std::optional<VertexSet> minimum_essential_cut(const Digraph& d) {
  const Digraph rev = d.reversed();
  return minimum_essential_cut(d.order(), [&](VertexSet alive) {
    return leaves_two_nontrivial(d, rev, alive);
  });
}

EssentialCutCertificate certify(VertexSet cut, ComponentPartition partition) {
  EssentialCutCertificate cert{cut, std::move(partition), {}};
  for (std::size_t i = 0; i < cert.partition.blocks.size(); ++i) {
    if (cert.partition.blocks[i].size() >= 2) {
      cert.nontrivial_blocks.push_back(static_cast<int>(i));
    }
  }
  return cert;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) return 0;
  bool complete = true;
  for (Vertex v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
  if (complete) return n - 1;

  SplitFlowNetwork net(g);
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (!g.has_edge(s, t)) best = std::min(best, net.max_flow(s, t));
    }
  }
  return best;
}

std::optional<EssentialCutCertificate> essential_connectivity(const Graph& g) {
  if (!is_connected(g)) {
    throw InvalidArgument("essential connectivity needs a connected graph");
  }
  auto cut = minimum_essential_cut(g);
  if (!cut) return std::nullopt;
  return certify(*cut, connected_components(g, g.vertices() - *cut));
}

std::optional<EssentialCutCertificate> digraph_essential_connectivity(
    const Digraph& d) {
  if (!is_strongly_connected(d)) {
    throw InvalidArgument("digraph essential connectivity needs a strongly connected digraph");
  }
  auto cut = minimum_essential_cut(d);
  if (!cut) return std::nullopt;
  return certify(*cut, strongly_connected_components(d, d.vertices() - *cut));
}

int essential_cut_size(const Graph& g) {
  auto cut = minimum_essential_cut(g);
  return cut ? cut->size() : -1;
}

int essential_cut_size(const Digraph& d) {
  auto cut = minimum_essential_cut(d);
  return cut ? cut->size() : -1;
}

}  // namespace essspec
