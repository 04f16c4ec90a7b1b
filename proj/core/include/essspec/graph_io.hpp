#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "essspec/graph.hpp"

namespace essspec {

enum class GraphFormat { kEdgeList, kGraph6, kDigraph6 };

/// Parses "el", "g6" or "d6".
GraphFormat parse_format_name(std::string_view name);
std::string format_name(GraphFormat f);

using AnyGraph = std::variant<Graph, Digraph>;

/// Edge list: header "n m" (optionally followed by the token "directed"),
/// then exactly m lines "u v". Rejects loops, duplicates and out-of-range
/// vertices with a ParseError carrying the 1-based line number.
AnyGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);
std::string write_edge_list(const Digraph& d);

/// graph6 with the single-byte size form (n <= 62).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// digraph6: '&', size byte, then the n*n adjacency bits row by row.
Digraph parse_digraph6(std::string_view text);
std::string write_digraph6(const Digraph& d);

AnyGraph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const AnyGraph& g, GraphFormat format);

}  // namespace essspec
