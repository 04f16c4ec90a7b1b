#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "essspec/canonical.hpp"
#include "essspec/enumerate.hpp"
#include "essspec/graph.hpp"
#include "essspec/spectral.hpp"

namespace essspec {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'e55c'0417'2024ULL;

struct VerifyConfig {
  /// Worker threads for exhaustive runs; results do not depend on it.
  int threads = 1;
  /// Relative enclosure width requested from power iteration.
  double tol = 1e-12;
  /// Threshold for comparisons against closed forms and family minima.
  double compare_tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  int max_n = kDefaultMaxEnumerationOrder;
  /// Random digraphs wanted per (n, k) in the digraph family check.
  int samples = 200;
  /// Random digraph draws allowed before the sampling stage gives up.
  std::uint64_t sample_budget = 2'000'000;
};

/// Thread count from ESSSPEC_THREADS, or 1 when unset or malformed.
int default_thread_count();

struct LambdaEnclosure {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct VerificationReport {
  std::string claim;
  std::map<std::string, long long> parameters;
  std::uint64_t candidates_examined = 0;
  /// Canonical form of the reported minimizer (graph6 / digraph6).
  std::string minimizer_canonical;
  /// Canonical form of the extremal construction; empty if infeasible.
  std::string construction_canonical;
  LambdaEnclosure min_lambda1;
  bool extremal_matches = false;
  bool uniqueness = false;
  std::int64_t runtime_ms = 0;
  /// Claim-specific diagnostics (minimizer list, sweeps, sampling stats).
  nlohmann::json details = nlohmann::json::object();
};

/// Among all connected graphs on n vertices with essential connectivity
/// kappa, finds the distance spectral radius minimizers and compares them
/// with theorem1_extremal(n, kappa). Requires kappa + 4 <= n <= max_n.
VerificationReport verify_theorem1(int n, int kappa, const VerifyConfig& cfg = {});

/// As verify_theorem1 restricted to minimum degree delta, against
/// theorem2_extremal(n, kappa, delta). An infeasible construction is
/// reported in details.construction_infeasible, never thrown.
VerificationReport verify_theorem2(int n, int kappa, int delta, const VerifyConfig& cfg = {});

/// Sweeps n1 over the digraph family for (n, k) and, for n <= 7, samples
/// random strongly connected digraphs with essential connectivity k.
VerificationReport verify_theorem3_family(int n, int k, const VerifyConfig& cfg = {});

/// Minimizer bookkeeping for exhaustive runs.
///
/// Keeps min_upper, the smallest upper enclosure seen, and every canonical
/// form whose best lower enclosure does not exceed it. The surviving set is
/// a function of the candidate multiset only, so merging per-worker sets in
/// any order gives the same answer.
class MinimizerSet {
 public:
  void offer(const Graph& g, const SpectralResult& r);
  void merge(const MinimizerSet& other);

  double min_upper() const { return min_upper_; }
  /// Surviving canonical forms, sorted.
  std::vector<std::string> forms() const;
  bool empty() const { return lowest_lower_.empty(); }

 private:
  void prune();

  double min_upper_ = std::numeric_limits<double>::infinity();
  std::map<std::string, double> lowest_lower_;
};

// Lemma checks ---------------------------------------------------------

/// lambda1(D(G)) < lambda1(D(G - e)), decided on separated enclosures.
/// Throws PreconditionError if e is not an edge or G - e is disconnected.
bool check_edge_monotonicity(const Graph& g, Edge e, const SpectralOptions& opts = {});

/// lambda1(D(G + uv)) < lambda1(D(G)) for an absent arc uv.
/// Throws PreconditionError if the arc exists or D is not strongly connected.
bool check_arc_monotonicity(const Digraph& d, Arc arc, const SpectralOptions& opts = {});

struct BalancingCheck {
  bool holds = false;
  /// Set exactly when `parts` already is the balanced profile.
  bool equality = false;
  std::vector<int> balanced;
  double lambda_parts = 0.0;
  double lambda_balanced = 0.0;
};

/// (total - p(c-1), p, ..., p) for c parts with the given total.
std::vector<int> balanced_profile(const std::vector<int>& parts, int p);

/// Compares K_s v (K_parts[0] u ...) with its balanced profile. Requires
/// s >= 1, p >= 1, parts sorted descending, parts[0] >= 2p, all parts >= p.
BalancingCheck check_balancing_lemma(int s, const std::vector<int>& parts, int p,
                                     const SpectralOptions& opts = {});

/// Outcome of a seeded property campaign or parameter sweep.
struct CampaignReport {
  std::string claim;
  std::map<std::string, long long> parameters;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::int64_t runtime_ms = 0;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return trials > 0 && failures == 0; }
};

CampaignReport edge_monotonicity_campaign(std::uint64_t trials, std::uint64_t seed,
                                          int min_n = 4, int max_n = 8);
CampaignReport arc_monotonicity_campaign(std::uint64_t trials, std::uint64_t seed,
                                         int min_n = 4, int max_n = 7);
/// Every profile with s <= max_s, at most max_c parts of size >= p and
/// parts[0] >= 2p, total order <= max_order.
CampaignReport balancing_sweep(int max_s = 3, int max_c = 3, int p = 2, int max_order = 12);
/// discriminant_excess minimised only at x in {2, n-k-2} and equal to
/// 12n - 8k - 20 there, for min_gap <= n-k <= max_gap and 1 <= k <= max_k.
CampaignReport discriminant_sweep(int min_gap = 5, int max_gap = 50, int max_k = 10);

}  // namespace essspec
