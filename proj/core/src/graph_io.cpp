#include "essspec/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "essspec/errors.hpp"

namespace essspec {
namespace {

constexpr int kMaxSixByteOrder = 62;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

// Packs bits six at a time, most significant first, zero padded, offset 63.
std::string pack_bits(const std::vector<bool>& bits) {
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int chunk = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      chunk <<= 1;
      if (i + b < bits.size() && bits[i + b]) chunk |= 1;
    }
    out.push_back(static_cast<char>(chunk + 63));
  }
  return out;
}

std::vector<bool> unpack_bits(std::string_view data, std::size_t count) {
  if (data.size() != (count + 5) / 6) {
    throw ParseError("expected " + std::to_string((count + 5) / 6) +
                         " data bytes, got " + std::to_string(data.size()),
                     0);
  }
  std::vector<bool> bits;
  bits.reserve(data.size() * 6);
  for (char c : data) {
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw ParseError("byte outside the printable range 63..126", 0);
    for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  for (std::size_t i = count; i < bits.size(); ++i) {
    if (bits[i]) throw ParseError("nonzero padding bits", 0);
  }
  bits.resize(count);
  return bits;
}

int parse_size_byte(char c) {
  const int n = static_cast<unsigned char>(c) - 63;
  if (n < 0 || n > 63) throw ParseError("bad size byte", 0);
  if (n == 63) throw ParseError("multi-byte size form (n > 62) is not supported", 0);
  if (n == 0) throw ParseError("graphs need at least one vertex", 0);
  return n;
}

void check_writable(int n) {
  if (n > kMaxSixByteOrder) {
    throw InvalidArgument("graph6/digraph6 writer supports n <= 62");
  }
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
  if (name == "el") return GraphFormat::kEdgeList;
  if (name == "g6") return GraphFormat::kGraph6;
  if (name == "d6") return GraphFormat::kDigraph6;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

std::string format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::kEdgeList: return "el";
    case GraphFormat::kGraph6: return "g6";
    case GraphFormat::kDigraph6: return "d6";
  }
  return "?";
}

AnyGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;  // (line number, content)
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (!split_ws(line).empty()) lines.emplace_back(number, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing header 'n m'", 1);

  auto header = split_ws(lines[0].second);
  const int header_line = lines[0].first;
  if (header.size() < 2 || header.size() > 3) {
    throw ParseError("header must be 'n m' or 'n m directed'", header_line);
  }
  bool directed = false;
  if (header.size() == 3) {
    if (header[2] != "directed") {
      throw ParseError("unexpected header token '" + std::string(header[2]) + "'", header_line);
    }
    directed = true;
  }
  const long long n = to_int(header[0], header_line);
  const long long m = to_int(header[1], header_line);
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("vertex count must lie in [1, 64]", header_line);
  }
  if (m < 0) throw ParseError("edge count must be nonnegative", header_line);

  std::size_t next = 1;
  if (!directed && next < lines.size() && split_ws(lines[next].second).size() == 1 &&
      split_ws(lines[next].second)[0] == "directed") {
    directed = true;
    ++next;
  }

  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> pairs;
  for (long long e = 0; e < m; ++e, ++next) {
    if (next >= lines.size()) {
      throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                           std::to_string(e),
                       number);
    }
    const int ln = lines[next].first;
    auto tok = split_ws(lines[next].second);
    if (tok.size() != 2) throw ParseError("edge line must be 'u v'", ln);
    const long long u = to_int(tok[0], ln);
    const long long v = to_int(tok[1], ln);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex out of range", ln);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), ln);
    std::pair<int, int> key(static_cast<int>(u), static_cast<int>(v));
    if (!directed && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second) throw ParseError("duplicate edge", ln);
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next < lines.size()) {
    throw ParseError("unexpected content after the edge lines", lines[next].first);
  }

  if (directed) {
    Digraph d(static_cast<int>(n));
    for (auto [u, v] : pairs) d.add_arc(u, v);
    return d;
  }
  Graph g(static_cast<int>(n));
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string write_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.arc_count() << " directed\n";
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty graph6 string", 0);
  if (s.rfind(">>graph6<<", 0) == 0) return parse_graph6(s.substr(10));
  if (s[0] == '&') throw ParseError("digraph6 string given where graph6 expected", 0);
  if (s[0] == ':' || s[0] == ';') throw ParseError("sparse6 is not supported", 0);
  const int n = parse_size_byte(s[0]);
  const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const auto bits = unpack_bits(std::string_view(s).substr(1), count);
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bits[k]) g.add_edge(i, j);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  check_writable(n);
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  }
  return std::string(1, static_cast<char>(n + 63)) + pack_bits(bits);
}

Digraph parse_digraph6(std::string_view text) {
  const std::string s = trim(text);
  if (s.rfind(">>digraph6<<", 0) == 0) return parse_digraph6(s.substr(12));
  if (s.size() < 2 || s[0] != '&') throw ParseError("digraph6 must start with '&'", 0);
  const int n = parse_size_byte(s[1]);
  const auto bits = unpack_bits(std::string_view(s).substr(2),
                                static_cast<std::size_t>(n) * n);
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!bits[static_cast<std::size_t>(i) * n + j]) continue;
      if (i == j) throw ParseError("loop at vertex " + std::to_string(i), 0);
      d.add_arc(i, j);
    }
  }
  return d;
}

std::string write_digraph6(const Digraph& d) {
  const int n = d.order();
  check_writable(n);
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) bits.push_back(d.has_arc(i, j));
  }
  return "&" + std::string(1, static_cast<char>(n + 63)) + pack_bits(bits);
}

AnyGraph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList: return parse_edge_list(text);
    case GraphFormat::kGraph6: return parse_graph6(text);
    case GraphFormat::kDigraph6: return parse_digraph6(text);
  }
  throw InvalidArgument("unknown format");
}

std::string write_graph(const AnyGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return std::visit([](const auto& x) { return write_edge_list(x); }, g);
    case GraphFormat::kGraph6:
      if (!std::holds_alternative<Graph>(g)) {
        throw InvalidArgument("graph6 cannot encode a digraph; use d6");
      }
      return write_graph6(std::get<Graph>(g));
    case GraphFormat::kDigraph6:
      if (std::holds_alternative<Graph>(g)) {
        return write_digraph6(Digraph::symmetric_closure(std::get<Graph>(g)));
      }
      return write_digraph6(std::get<Digraph>(g));
  }
  throw InvalidArgument("unknown format");
}

}  // namespace essspec
