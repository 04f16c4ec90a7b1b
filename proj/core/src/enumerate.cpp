#include "essspec/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace essspec {

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<MaskRange> partition_masks(int n, int parts) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  const std::uint64_t count = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(parts, 1)), 1, total);
  std::vector<MaskRange> ranges;
  for (std::uint64_t i = 0; i < count; ++i) {
    ranges.push_back({total * i / count, total * (i + 1) / count});
  }
  return ranges;
}

void check_enumeration_order(int n, int max_n) {
  if (n < 1) throw InvalidArgument("enumeration needs n >= 1");
  if (n > max_n) {
    throw InvalidArgument("enumeration of n = " + std::to_string(n) +
                          " refused (limit " + std::to_string(max_n) +
                          "; raise it with --max-n)");
  }
  if (pair_count(n) > 40) throw InvalidArgument("enumeration beyond n = 9 is not supported");
}

std::uint64_t count_connected_graphs(int n, int threads, int max_n) {
  check_enumeration_order(n, max_n);
  const auto ranges = partition_masks(n, std::max(threads, 1) * 8);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&] {
    std::uint64_t local = 0;
    for (std::size_t i; (i = next.fetch_add(1)) < ranges.size();) {
      for_each_connected_graph(n, ranges[i], [&](const Graph&, std::uint64_t) { ++local; });
    }
    total += local;
  };
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return total.load();
}

}  // namespace essspec
