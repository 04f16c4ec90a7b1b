#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "essspec/errors.hpp"
#include "essspec/extremal.hpp"
#include "essspec/graph_io.hpp"
#include "essspec/verify.hpp"

namespace essspec {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

std::string profile_string(int s, const std::vector<int>& parts) {
  std::ostringstream out;
  out << "s=" << s << " parts=(";
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ')';
  return out.str();
}

// Descending sequences of length c, entries in [p, cap], summing to at most
// `budget`, with first entry >= first_min.
void descending_profiles(int c, int p, int cap, int budget, int first_min,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == c) {
    out.push_back(cur);
    return;
  }
  const int lo = cur.empty() ? std::max(p, first_min) : p;
  const int slots_after = c - static_cast<int>(cur.size()) - 1;
  for (int v = lo; v <= cap && v + slots_after * p <= budget; ++v) {
    cur.push_back(v);
    descending_profiles(c, p, v, budget - v, first_min, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool check_edge_monotonicity(const Graph& g, Edge e, const SpectralOptions& opts) {
  if (!g.has_edge(e.first, e.second)) throw PreconditionError("edge is not in the graph");
  if (!is_connected(g)) throw PreconditionError("graph must be connected");
  Graph without = g;
  without.remove_edge(e.first, e.second);
  if (!is_connected(without)) throw PreconditionError("G - e is disconnected");
  auto [with_r, without_r] = separate_enclosures(distance_matrix(g), distance_matrix(without), opts);
  return with_r.certainly_below(without_r);
}

bool check_arc_monotonicity(const Digraph& d, Arc arc, const SpectralOptions& opts) {
  if (d.has_arc(arc.first, arc.second)) throw PreconditionError("arc already present");
  if (!is_strongly_connected(d)) throw PreconditionError("digraph must be strongly connected");
  Digraph plus = d;
  plus.add_arc(arc.first, arc.second);
  auto [plus_r, base_r] =
      separate_enclosures(directed_distance_matrix(plus), directed_distance_matrix(d), opts);
  return plus_r.certainly_below(base_r);
}

std::vector<int> balanced_profile(const std::vector<int>& parts, int p) {
  int total = 0;
  for (int x : parts) total += x;
  const int c = static_cast<int>(parts.size());
  std::vector<int> out(c, p);
  if (c > 0) out[0] = total - p * (c - 1);
  return out;
}

BalancingCheck check_balancing_lemma(int s, const std::vector<int>& parts, int p,
                                     const SpectralOptions& opts) {
  if (s < 1 || p < 1 || parts.empty()) {
    throw InvalidArgument("balancing check needs s >= 1, p >= 1 and at least one part");
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw InvalidArgument("parts must be sorted in descending order");
  }
  if (parts.front() < 2 * p || parts.back() < p) {
    throw InvalidArgument("parts need parts[0] >= 2p and every part >= p");
  }

  BalancingCheck out;
  out.balanced = balanced_profile(parts, p);
  const Graph given = clique_join(s, parts);
  const Graph balanced = clique_join(s, out.balanced);
  if (parts == out.balanced) {
    const auto r = spectral_radius(distance_matrix(given), opts);
    out.holds = true;
    out.equality = true;
    out.lambda_parts = out.lambda_balanced = r.lambda1;
    return out;
  }
  auto [parts_r, balanced_r] = separate_enclosures(distance_matrix(given), distance_matrix(balanced), opts);
  out.holds = balanced_r.certainly_below(parts_r);
  out.lambda_parts = parts_r.lambda1;
  out.lambda_balanced = balanced_r.lambda1;
  return out;
}

CampaignReport edge_monotonicity_campaign(std::uint64_t trials, std::uint64_t seed, int min_n,
                                          int max_n) {
  const auto start = Clock::now();
  if (min_n < 3 || max_n < min_n || max_n > kMaxVertices) {
    throw InvalidArgument("edge campaign needs 3 <= min_n <= max_n");
  }
  CampaignReport report;
  report.claim = "LEMMA-EDGE";
  report.parameters = {{"trials", static_cast<long long>(trials)},
                       {"seed", static_cast<long long>(seed)},
                       {"min_n", min_n},
                       {"max_n", max_n}};
  auto rng = seeded(seed, 1);
  std::uniform_int_distribution<int> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.25, 0.9);
  nlohmann::json failures = nlohmann::json::array();
  while (report.trials < trials) {
    const int n = order(rng);
    std::bernoulli_distribution coin(density(rng));
    Graph g(n);
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (coin(rng)) g.add_edge(i, j);
      }
    }
    if (!is_connected(g)) continue;
    std::vector<Edge> removable;
    for (Edge e : g.edges()) {
      Graph h = g;
      h.remove_edge(e.first, e.second);
      if (is_connected(h)) removable.push_back(e);
    }
    if (removable.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, removable.size() - 1);
    const Edge e = removable[pick(rng)];
    ++report.trials;
    if (!check_edge_monotonicity(g, e)) {
      ++report.failures;
      if (failures.size() < 10) failures.push_back({{"graph6", write_graph6(g)}, {"edge", {e.first, e.second}}});
    }
  }
  report.details["failures"] = failures;
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CampaignReport arc_monotonicity_campaign(std::uint64_t trials, std::uint64_t seed, int min_n,
                                         int max_n) {
  const auto start = Clock::now();
  if (min_n < 2 || max_n < min_n || max_n > kMaxVertices) {
    throw InvalidArgument("arc campaign needs 2 <= min_n <= max_n");
  }
  CampaignReport report;
  report.claim = "LEMMA-ARC";
  report.parameters = {{"trials", static_cast<long long>(trials)},
                       {"seed", static_cast<long long>(seed)},
                       {"min_n", min_n},
                       {"max_n", max_n}};
  auto rng = seeded(seed, 2);
  std::uniform_int_distribution<int> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  nlohmann::json failures = nlohmann::json::array();
  while (report.trials < trials) {
    const int n = order(rng);
    std::bernoulli_distribution coin(density(rng));
    Digraph d(n);
    std::vector<Arc> absent;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        if (coin(rng)) {
          d.add_arc(u, v);
        } else {
          absent.emplace_back(u, v);
        }
      }
    }
    if (absent.empty() || !is_strongly_connected(d)) continue;
    std::uniform_int_distribution<std::size_t> pick(0, absent.size() - 1);
    const Arc a = absent[pick(rng)];
    ++report.trials;
    if (!check_arc_monotonicity(d, a)) {
      ++report.failures;
      if (failures.size() < 10) failures.push_back({{"digraph6", write_digraph6(d)}, {"arc", {a.first, a.second}}});
    }
  }
  report.details["failures"] = failures;
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CampaignReport balancing_sweep(int max_s, int max_c, int p, int max_order) {
  const auto start = Clock::now();
  CampaignReport report;
  report.claim = "LEMMA-BALANCE";
  report.parameters = {{"max_s", max_s}, {"max_c", max_c}, {"p", p}, {"max_order", max_order}};
  nlohmann::json failures = nlohmann::json::array();
  std::uint64_t equalities = 0;
  for (int s = 1; s <= max_s; ++s) {
    for (int c = 1; c <= max_c; ++c) {
      std::vector<std::vector<int>> profiles;
      std::vector<int> cur;
      const int budget = max_order - s;
      descending_profiles(c, p, budget, budget, 2 * p, cur, profiles);
      for (const auto& parts : profiles) {
        ++report.trials;
        const auto check = check_balancing_lemma(s, parts, p);
        const bool is_balanced = parts == check.balanced;
        if (check.equality) ++equalities;
        if (!check.holds || check.equality != is_balanced) {
          ++report.failures;
          if (failures.size() < 10) failures.push_back(profile_string(s, parts));
        }
      }
    }
  }
  report.details["equality_cases"] = equalities;
  report.details["failures"] = failures;
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CampaignReport discriminant_sweep(int min_gap, int max_gap, int max_k) {
  const auto start = Clock::now();
  if (min_gap < 4 || max_gap < min_gap || max_k < 1) {
    throw InvalidArgument("discriminant sweep needs 4 <= min_gap <= max_gap and max_k >= 1");
  }
  CampaignReport report;
  report.claim = "LEMMA-F";
  report.parameters = {{"min_gap", min_gap}, {"max_gap", max_gap}, {"max_k", max_k}};
  nlohmann::json failures = nlohmann::json::array();
  for (int gap = min_gap; gap <= max_gap; ++gap) {
    for (int k = 1; k <= max_k; ++k) {
      const int n = gap + k;
      ++report.trials;
      const auto argmin = discriminant_excess_argmin(n, k);
      const double at_low = discriminant_excess(2, n, k);
      const double at_high = discriminant_excess(gap - 2, n, k);
      const double expected = 12.0 * n - 8.0 * k - 20.0;
      const bool endpoints = std::all_of(argmin.begin(), argmin.end(),
                                         [&](int x) { return x == 2 || x == gap - 2; });
      if (!endpoints || at_low != expected || at_high != expected) {
        ++report.failures;
        if (failures.size() < 10) failures.push_back({{"n", n}, {"k", k}});
      }
    }
  }
  report.details["failures"] = failures;
  report.runtime_ms = elapsed_ms(start);
  return report;
}

}  // namespace essspec
