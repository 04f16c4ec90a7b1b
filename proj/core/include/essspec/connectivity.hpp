#pragma once

#include <optional>
#include <vector>

#include "essspec/graph.hpp"

namespace essspec {

/// A minimum essential vertex cut together with the components it leaves.
struct EssentialCutCertificate {
  VertexSet cut;
  /// Components (strong components for digraphs) of the graph minus `cut`.
  ComponentPartition partition;
  /// Indices into partition.blocks of blocks with at least two vertices.
  std::vector<int> nontrivial_blocks;

  int size() const { return cut.size(); }
};

/// Menger vertex connectivity via unit-capacity max-flow over all
/// non-adjacent pairs; n-1 for complete graphs and 0 when disconnected.
int vertex_connectivity(const Graph& g);

/// Minimum vertex set whose removal leaves at least two components with
/// two or more vertices each, or nullopt if no such set exists. Among cuts
/// of minimum size the lexicographically smallest is returned.
/// Throws InvalidArgument when g is disconnected.
std::optional<EssentialCutCertificate> essential_connectivity(const Graph& g);

/// Digraph analogue: at least two strongly connected components of D - S
/// with two or more vertices. Throws InvalidArgument unless d is strongly
/// connected.
std::optional<EssentialCutCertificate> digraph_essential_connectivity(
    const Digraph& d);

/// Size of a minimum essential cut, or -1 when none exists. Skips the
/// connectivity check and builds no certificate; used by enumeration.
int essential_cut_size(const Graph& g);
int essential_cut_size(const Digraph& d);

}  // namespace essspec
