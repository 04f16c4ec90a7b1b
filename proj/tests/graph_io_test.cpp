#include <gtest/gtest.h>

#include <random>

#include "essspec/errors.hpp"
#include "essspec/graph_io.hpp"
#include "test_support.hpp"

namespace essspec {
namespace {

int error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

TEST(EdgeList, Examples) {
  EXPECT_EQ(std::get<Graph>(parse_edge_list("3 2\n0 1\n1 2")), path_graph(3));
  EXPECT_EQ(std::get<Graph>(parse_edge_list("3 3\n0 1\n1 2\n0 2\n")), complete_graph(3));
  EXPECT_EQ(error_line("2 1\n0 0"), 2);
}

TEST(EdgeList, Directed) {
  const auto a = parse_edge_list("3 3 directed\n0 1\n1 2\n2 0\n");
  ASSERT_TRUE(std::holds_alternative<Digraph>(a));
  EXPECT_EQ(std::get<Digraph>(a), directed_cycle(3));
  const auto b = parse_edge_list("2 2\ndirected\n0 1\n1 0\n");
  EXPECT_EQ(std::get<Digraph>(b), complete_digraph(2));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line(""), 1);
  EXPECT_EQ(error_line("x 1\n0 1"), 1);
  EXPECT_EQ(error_line("3 1 undirected\n0 1"), 1);
  EXPECT_EQ(error_line("3 2\n0 1\n1 0"), 3);
  EXPECT_EQ(error_line("3 1\n0 3"), 2);
  EXPECT_EQ(error_line("3 1\n\n0 -1"), 3);
  EXPECT_EQ(error_line("3 2\n0 1"), 2);
  EXPECT_EQ(error_line("3 1\n0 1\n1 2"), 3);
  EXPECT_EQ(error_line("3 1\n0 1 2"), 2);
  EXPECT_NO_THROW(parse_edge_list("3 2 directed\n0 1\n1 0"));
}

TEST(Graph6, ReferenceEncodings) {
  EXPECT_EQ(write_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(write_graph6(Graph(2)), "A?");
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(write_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(write_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(write_graph6(petersen()), "IheA@GUAo");
}

TEST(Graph6, ParsesHeaderAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<IheA@GUAo\n"), petersen());
  EXPECT_EQ(parse_graph6("Bw\n"), complete_graph(3));
}

TEST(Graph6, Rejections) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("Bx"), ParseError);      // nonzero padding
  EXPECT_THROW(parse_graph6("B"), ParseError);       // too short
  EXPECT_THROW(parse_graph6("Bww"), ParseError);     // too long
  EXPECT_THROW(parse_graph6("B\x7f"), ParseError);   // outside 63..126
  EXPECT_THROW(parse_graph6("~?@A"), ParseError);    // multi-byte size
  EXPECT_THROW(parse_graph6(":Fa@x^"), ParseError);  // sparse6
  EXPECT_THROW(write_graph6(complete_graph(63)), InvalidArgument);
}

TEST(Graph6, RoundTripRandomGraphs) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 10, density(rng));
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    EXPECT_EQ(std::get<Graph>(parse_edge_list(write_edge_list(g))), g);
  }
  const Graph big = testing::random_graph(rng, 62, 0.5);
  EXPECT_EQ(parse_graph6(write_graph6(big)), big);
}

TEST(Digraph6, ReferenceEncoding) {
  Digraph d(5);
  for (auto [u, v] : {Arc{0, 2}, Arc{0, 4}, Arc{3, 1}, Arc{3, 4}}) d.add_arc(u, v);
  EXPECT_EQ(write_digraph6(d), "&DI?AO?");
  EXPECT_EQ(parse_digraph6("&DI?AO?\n"), d);
}

TEST(Digraph6, RoundTripAndRejections) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 500; ++trial) {
    const Digraph d = testing::random_digraph(rng, 1 + trial % 10, 0.4);
    EXPECT_EQ(parse_digraph6(write_digraph6(d)), d);
    EXPECT_EQ(std::get<Digraph>(parse_edge_list(write_edge_list(d))), d);
  }
  EXPECT_THROW(parse_digraph6("Bw"), ParseError);
  EXPECT_THROW(parse_digraph6("&B_"), ParseError);  // loop at 0
  EXPECT_THROW(parse_graph6("&DI?AO?"), ParseError);
}

TEST(Formats, NamesAndDispatch) {
  EXPECT_EQ(parse_format_name("el"), GraphFormat::kEdgeList);
  EXPECT_EQ(parse_format_name("g6"), GraphFormat::kGraph6);
  EXPECT_EQ(format_name(GraphFormat::kDigraph6), "d6");
  EXPECT_THROW(parse_format_name("s6"), InvalidArgument);
  const AnyGraph k3 = complete_graph(3);
  EXPECT_EQ(write_graph(k3, GraphFormat::kGraph6), "Bw");
  EXPECT_EQ(std::get<Digraph>(parse_graph(write_graph(k3, GraphFormat::kDigraph6), GraphFormat::kDigraph6)),
            complete_digraph(3));
  EXPECT_THROW(write_graph(AnyGraph(directed_cycle(3)), GraphFormat::kGraph6), InvalidArgument);
}

}  // namespace
}  // namespace essspec
