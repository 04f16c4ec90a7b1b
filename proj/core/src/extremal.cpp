#include "essspec/extremal.hpp"

#include <cmath>
#include <limits>

#include "essspec/connectivity.hpp"
#include "essspec/errors.hpp"

namespace essspec {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::kTheorem1: return "thm1";
    case Family::kTheorem2: return "thm2";
    case Family::kTheorem3: return "thm3";
  }
  return "?";
}

void ExtremalSpec::validate() const {
  switch (family) {
    case Family::kTheorem1:
      require(kappa >= 1 && n >= kappa + 4, "thm1 needs kappa >= 1 and n >= kappa + 4");
      break;
    case Family::kTheorem2:
      require(kappa >= 1 && n >= kappa + 4, "thm2 needs kappa >= 1 and n >= kappa + 4");
      require(delta.has_value() && *delta >= 1, "thm2 needs delta >= 1");
      break;
    case Family::kTheorem3:
      require(kappa >= 1, "thm3 needs k >= 1");
      require(n1.has_value() && *n1 >= 2 && *n1 <= n - kappa - 2,
              "thm3 needs 2 <= n1 <= n-k-2");
      break;
  }
}

Graph theorem1_extremal(int n, int kappa) {
  ExtremalSpec{Family::kTheorem1, n, kappa, {}, {}}.validate();
  return join(complete_graph(kappa),
              disjoint_union(complete_graph(2), complete_graph(n - kappa - 2)));
}

Theorem2Case theorem2_case(int kappa, int delta) {
  return kappa > delta - 1 ? Theorem2Case::kAttachedVertex : Theorem2Case::kJoin;
}

Graph theorem2_extremal(int n, int kappa, int delta) {
  ExtremalSpec{Family::kTheorem2, n, kappa, delta, {}}.validate();

  Graph g(n);
  if (theorem2_case(kappa, delta) == Theorem2Case::kAttachedVertex) {
    // Layout: clique 0..kappa-1, w = kappa, big clique, z = n-1.
    const Vertex w = kappa;
    const Vertex z = n - 1;
    g = join(complete_graph(kappa),
             disjoint_union(complete_graph(1), complete_graph(n - kappa - 2)));
    g = disjoint_union(g, Graph(1));
    for (Vertex c = 0; c < delta - 1; ++c) g.add_edge(z, c);
    g.add_edge(z, w);
  } else {
    if (n - delta - 1 < 1) {
      throw ConstructionInfeasible("thm2 join case needs n - delta - 1 >= 1");
    }
    g = join(complete_graph(kappa),
             disjoint_union(complete_graph(n - delta - 1),
                            complete_graph(delta - kappa + 1)));
  }

  const int got_delta = min_degree(g);
  const int got_kappa = essential_cut_size(g);
  if (got_delta != delta || got_kappa != kappa) {
    throw ConstructionInfeasible(
        "thm2 construction for (n=" + std::to_string(n) + ", kappa=" +
        std::to_string(kappa) + ", delta=" + std::to_string(delta) +
        ") has min degree " + std::to_string(got_delta) +
        " and essential connectivity " + std::to_string(got_kappa));
  }
  return g;
}

Digraph theorem3_extremal(int n, int k, int n1) {
  ExtremalSpec{Family::kTheorem3, n, k, {}, n1}.validate();
  const int n2 = n - k - n1;
  Digraph d = directed_join(complete_digraph(k),
                            disjoint_union(complete_digraph(n1), complete_digraph(n2)));
  for (Vertex u = k; u < k + n1; ++u) {
    for (Vertex v = k + n1; v < n; ++v) d.add_arc(u, v);
  }
  return d;
}

Graph build(const ExtremalSpec& spec) {
  switch (spec.family) {
    case Family::kTheorem1: return theorem1_extremal(spec.n, spec.kappa);
    case Family::kTheorem2: return theorem2_extremal(spec.n, spec.kappa, spec.delta.value_or(0));
    case Family::kTheorem3: break;
  }
  throw InvalidArgument("thm3 builds a digraph; use theorem3_extremal");
}

Graph clique_join(int s, std::span<const int> parts) {
  if (s < 1) throw InvalidArgument("clique_join needs s >= 1");
  if (parts.empty()) return complete_graph(s);
  for (int p : parts) {
    if (p < 1) throw InvalidArgument("clique sizes must be positive");
  }
  Graph rest = complete_graph(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    rest = disjoint_union(rest, complete_graph(parts[i]));
  }
  return join(complete_graph(s), rest);
}

double discriminant_excess(double x, int n, int k) {
  if (k < 1 || x < 2.0 || x > n - k - 2.0) {
    throw InvalidArgument("discriminant_excess needs k >= 1 and 2 <= x <= n-k-2");
  }
  return -4.0 * x * x + 4.0 * (n - k) * x + 4.0 * n - 4.0;
}

std::vector<int> discriminant_excess_argmin(int n, int k) {
  if (k < 1 || n - k - 2 < 2) {
    throw InvalidArgument("discriminant_excess_argmin needs k >= 1 and n-k >= 4");
  }
  // Exact in doubles: all values are integers far below 2^53.
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> argmin;
  for (int x = 2; x <= n - k - 2; ++x) {
    const double v = discriminant_excess(x, n, k);
    if (v < best) {
      best = v;
      argmin.assign(1, x);
    } else if (v == best) {
      argmin.push_back(x);
    }
  }
  return argmin;
}

}  // namespace essspec
