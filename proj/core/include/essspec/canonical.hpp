#pragma once

#include <compare>
#include <string>

#include "essspec/graph.hpp"

namespace essspec {

/// Isomorphism-invariant encoding: two graphs have equal forms iff they are
/// isomorphic. The bytes are the graph6 (digraph6) string of a canonical
/// relabelling, so they also decode back to a representative.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kMaxCanonicalGraphOrder = 10;
inline constexpr int kMaxCanonicalDigraphOrder = 16;

/// Lexicographically smallest upper-triangle code over all labelings that
/// respect iterated degree refinement. Throws InvalidArgument for n > 10.
CanonicalForm canonical_form(const Graph& g);
/// Same for digraphs (n <= 16), over both arc directions per vertex pair.
CanonicalForm canonical_form(const Digraph& d);

/// The relabelled graph whose encoding is canonical_form(g).
Graph canonical_representative(const Graph& g);
Digraph canonical_representative(const Digraph& d);

}  // namespace essspec
