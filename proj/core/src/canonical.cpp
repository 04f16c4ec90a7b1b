#include "essspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "essspec/errors.hpp"
#include "essspec/graph_io.hpp"

namespace essspec {
namespace {

// Out- and in-neighbour rows; identical for undirected graphs.
struct Rows {
  int n;
  bool directed;
  std::vector<VertexSet> out;
  std::vector<VertexSet> in;

  bool arc(Vertex u, Vertex v) const { return out[u].contains(v); }
};

Rows rows_of(const Graph& g) {
  std::vector<VertexSet> r(g.rows().begin(), g.rows().end());
  return {g.order(), false, r, r};
}

Rows rows_of(const Digraph& d) {
  Rows r{d.order(), true, {}, {}};
  for (Vertex v = 0; v < d.order(); ++v) {
    r.out.push_back(d.out_neighbors(v));
    r.in.push_back(d.in_neighbors(v));
  }
  return r;
}

// Iterated degree refinement. Colours are ranks of signatures, so they are
// invariant under relabelling.
std::vector<int> refine(const Rows& r) {
  std::vector<int> color(r.n, 0);
  int classes = 1;
  for (;;) {
    std::vector<std::vector<int>> sig(r.n);
    for (Vertex v = 0; v < r.n; ++v) {
      auto& s = sig[v];
      s.push_back(color[v]);
      std::vector<int> outs;
      for (Vertex w : r.out[v]) outs.push_back(color[w]);
      std::sort(outs.begin(), outs.end());
      s.insert(s.end(), outs.begin(), outs.end());
      if (r.directed) {
        s.push_back(-1);
        std::vector<int> ins;
        for (Vertex w : r.in[v]) ins.push_back(color[w]);
        std::sort(ins.begin(), ins.end());
        s.insert(s.end(), ins.begin(), ins.end());
      }
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < r.n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) return color;
    classes = now;
  }
}

bool twins(const Rows& r, Vertex u, Vertex v) {
  const VertexSet both = VertexSet::single(u) | VertexSet::single(v);
  return (r.out[u] - both) == (r.out[v] - both) && (r.in[u] - both) == (r.in[v] - both) &&
         r.arc(u, v) == r.arc(v, u);
}

// For each v, the twins of v with smaller index. Swapping twins is an
// automorphism, so we may require twins to be placed in index order.
std::vector<VertexSet> twin_predecessors(const Rows& r) {
  std::vector<int> root(r.n);
  std::iota(root.begin(), root.end(), 0);
  for (Vertex v = 0; v < r.n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (root[u] == u && twins(r, u, v)) {
        root[v] = u;
        break;
      }
    }
  }
  std::map<int, VertexSet> classes;
  for (Vertex v = 0; v < r.n; ++v) classes[root[v]].insert(v);
  std::vector<VertexSet> pred(r.n);
  for (const auto& [rep, members] : classes) {
    bool pairwise = true;
    for (Vertex a : members) {
      for (Vertex b : members) {
        if (a < b && !twins(r, a, b)) pairwise = false;
      }
    }
    if (!pairwise || members.size() < 2) continue;
    VertexSet before;
    for (Vertex v : members) {
      pred[v] = before;
      before.insert(v);
    }
  }
  return pred;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Rows& r)
      : r_(r), color_(refine(r)), twin_pred_(twin_predecessors(r)) {
    std::vector<Vertex> order(r.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return color_[a] < color_[b]; });
    cell_at_.resize(r.n);
    for (int j = 0; j < r.n; ++j) {
      cell_at_[j] = VertexSet{};
      for (Vertex v = 0; v < r.n; ++v) {
        if (color_[v] == color_[order[j]]) cell_at_[j].insert(v);
      }
    }
    perm_.assign(r.n, -1);
    code_.assign(r.n, 0);
  }

  // Position -> vertex for the minimal labelling.
  std::vector<Vertex> run() {
    search(0, VertexSet{});
    return best_perm_;
  }

 private:
  std::uint64_t column(int j, Vertex v) const {
    std::uint64_t col = 0;
    for (int i = 0; i < j; ++i) {
      const Vertex u = perm_[i];
      if (r_.directed) {
        col = (col << 2) | (static_cast<std::uint64_t>(r_.arc(u, v)) << 1) |
              static_cast<std::uint64_t>(r_.arc(v, u));
      } else {
        col = (col << 1) | static_cast<std::uint64_t>(r_.arc(u, v));
      }
    }
    return col;
  }

  // -1, 0, +1 comparing code_[0..j] with best_[0..j].
  int compare_prefix(int j) const {
    for (int i = 0; i <= j; ++i) {
      if (code_[i] != best_[i]) return code_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void search(int j, VertexSet used) {
    if (j == r_.n) {
      if (best_.empty() || compare_prefix(j - 1) < 0) {
        best_ = code_;
        best_perm_ = perm_;
      }
      return;
    }
    for (Vertex v : cell_at_[j] - used) {
      if (!(twin_pred_[v] - used).empty()) continue;
      perm_[j] = v;
      code_[j] = column(j, v);
      if (!best_.empty() && compare_prefix(j) > 0) continue;
      search(j + 1, used | VertexSet::single(v));
    }
  }

  const Rows& r_;
  std::vector<int> color_;
  std::vector<VertexSet> twin_pred_;
  std::vector<VertexSet> cell_at_;
  std::vector<Vertex> perm_;
  std::vector<std::uint64_t> code_;
  std::vector<std::uint64_t> best_;
  std::vector<Vertex> best_perm_;
};

std::vector<Vertex> inverse(const std::vector<Vertex>& position_to_vertex) {
  std::vector<Vertex> vertex_to_position(position_to_vertex.size());
  for (std::size_t p = 0; p < position_to_vertex.size(); ++p) {
    vertex_to_position[position_to_vertex[p]] = static_cast<Vertex>(p);
  }
  return vertex_to_position;
}

}  // namespace

Graph canonical_representative(const Graph& g) {
  if (g.order() > kMaxCanonicalGraphOrder) {
    throw InvalidArgument("canonical_form supports graphs with n <= 10");
  }
  const Rows r = rows_of(g);
  return g.relabeled(inverse(CanonicalSearch(r).run()));
}

Digraph canonical_representative(const Digraph& d) {
  if (d.order() > kMaxCanonicalDigraphOrder) {
    throw InvalidArgument("canonical_form supports digraphs with n <= 16");
  }
  const Rows r = rows_of(d);
  return d.relabeled(inverse(CanonicalSearch(r).run()));
}

CanonicalForm canonical_form(const Graph& g) {
  return {write_graph6(canonical_representative(g))};
}

CanonicalForm canonical_form(const Digraph& d) {
  return {write_digraph6(canonical_representative(d))};
}

}  // namespace essspec
