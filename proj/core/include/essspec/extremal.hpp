#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "essspec/graph.hpp"

namespace essspec {

enum class Family { kTheorem1, kTheorem2, kTheorem3 };

std::string to_string(Family f);

/// Parameters of one extremal construction. `kappa` is the essential
/// connectivity (k for the digraph family).
struct ExtremalSpec {
  Family family = Family::kTheorem1;
  int n = 0;
  int kappa = 0;
  std::optional<int> delta;
  std::optional<int> n1;

  /// Throws InvalidArgument when the parameters fall outside the family.
  void validate() const;
};

// Vertex layout of every construction: the join clique first (vertices
// 0..kappa-1), then the remaining blocks in the order they are written,
// then z for the attached-vertex case of theorem2_extremal.

/// K_kappa v (K_2 u K_{n-kappa-2}); requires kappa >= 1, n >= kappa + 4.
Graph theorem1_extremal(int n, int kappa);

enum class Theorem2Case {
  /// kappa > delta - 1: a vertex z tied to delta-1 clique vertices and to
  /// the K_1 of K_kappa v (K_1 u K_{n-kappa-2}).
  kAttachedVertex,
  /// kappa <= delta - 1: K_kappa v (K_{n-delta-1} u K_{delta-kappa+1}).
  kJoin,
};

Theorem2Case theorem2_case(int kappa, int delta);

/// Extremal graph for given essential connectivity and minimum degree.
/// The result is audited: throws ConstructionInfeasible unless its minimum
/// degree is delta and its essential connectivity is kappa.
Graph theorem2_extremal(int n, int kappa, int delta);

/// K_k (both ways) joined to K_n1 u K_{n-k-n1}, plus one-way arcs from
/// every vertex of the n1-clique to every vertex of the other clique.
/// Requires k >= 1, 2 <= n1 <= n-k-2.
Digraph theorem3_extremal(int n, int k, int n1);

Graph build(const ExtremalSpec& spec);

/// K_s v (K_{parts[0]} u K_{parts[1]} u ...).
Graph clique_join(int s, std::span<const int> parts);

/// Excess of the discriminant of the digraph family's quadratic over
/// (n-2)^2 at n1 = x: -4x^2 + 4(n-k)x + 4n - 4. Defined for k >= 1 and
/// 2 <= x <= n-k-2.
double discriminant_excess(double x, int n, int k);

/// Integers x in [2, n-k-2] minimising discriminant_excess, ascending.
std::vector<int> discriminant_excess_argmin(int n, int k);

}  // namespace essspec
