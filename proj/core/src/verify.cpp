#include "essspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "essspec/connectivity.hpp"
#include "essspec/errors.hpp"
#include "essspec/extremal.hpp"
#include "essspec/graph_io.hpp"

namespace essspec {
namespace {

using Clock = std::chrono::steady_clock;

// Tie resolution among distinct minimizers re-runs power iteration here.
constexpr double kTightTol = 1e-14;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

LambdaEnclosure enclosure_of(const SpectralResult& r) {
  return {r.lambda1, r.lower, r.upper};
}

nlohmann::json enclosure_json(const SpectralResult& r) {
  return {{"value", r.lambda1}, {"lower", r.lower}, {"upper", r.upper}};
}

struct ExhaustiveOutcome {
  std::uint64_t connected = 0;
  std::uint64_t candidates = 0;
  MinimizerSet minimizers;
};

template <typename Filter>
ExhaustiveOutcome run_exhaustive(int n, const VerifyConfig& cfg, Filter filter) {
  check_enumeration_order(n, cfg.max_n);
  const int threads = std::max(cfg.threads, 1);
  const auto ranges = partition_masks(n, threads * 16);
  std::vector<ExhaustiveOutcome> parts(ranges.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const SpectralOptions opts{cfg.tol};

  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < ranges.size();) {
        ExhaustiveOutcome& out = parts[i];
        for_each_connected_graph(n, ranges[i], [&](const Graph& g, std::uint64_t) {
          ++out.connected;
          if (!filter(g)) return;
          ++out.candidates;
          out.minimizers.offer(g, spectral_radius(distance_matrix(g), opts));
        });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = ranges.size();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  ExhaustiveOutcome total;
  for (const auto& p : parts) {
    total.connected += p.connected;
    total.candidates += p.candidates;
    total.minimizers.merge(p.minimizers);
  }
  return total;
}

// Fills the minimizer fields of `report` from an exhaustive outcome.
void finalize(VerificationReport& report, const ExhaustiveOutcome& outcome,
              const std::string& construction_form, const VerifyConfig& cfg) {
  report.candidates_examined = outcome.candidates;
  report.construction_canonical = construction_form;
  report.details["connected_graphs"] = outcome.connected;

  // Distinct forms still tied at cfg.tol are re-examined at a tighter
  // tolerance on their canonical representatives.
  std::vector<std::string> forms = outcome.minimizers.forms();
  std::map<std::string, SpectralResult> tight;
  if (forms.size() > 1) {
    double min_upper = std::numeric_limits<double>::infinity();
    for (const auto& f : forms) {
      auto r = spectral_radius(distance_matrix(parse_graph6(f)), {kTightTol});
      min_upper = std::min(min_upper, r.upper);
      tight.emplace(f, std::move(r));
    }
    std::erase_if(forms, [&](const std::string& f) { return tight.at(f).lower > min_upper; });
  }

  const bool has_construction = !construction_form.empty();
  report.extremal_matches =
      has_construction && std::find(forms.begin(), forms.end(), construction_form) != forms.end();
  report.uniqueness = forms.size() == 1;
  report.details["minimizers"] = forms;
  report.details["ambiguous"] = forms.size() > 1;

  if (report.extremal_matches) {
    report.minimizer_canonical = construction_form;
  } else if (!forms.empty()) {
    report.minimizer_canonical = forms.front();
    if (!tight.empty()) {
      for (const auto& f : forms) {
        if (tight.at(f).lower < tight.at(report.minimizer_canonical).lower) {
          report.minimizer_canonical = f;
        }
      }
    }
  }

  const SpectralOptions opts{cfg.tol};
  if (!report.minimizer_canonical.empty()) {
    const auto r = spectral_radius(distance_matrix(parse_graph6(report.minimizer_canonical)), opts);
    report.min_lambda1 = enclosure_of(r);
    report.details["enclosure_within_threshold"] = r.width() <= cfg.compare_tol * r.lambda1;
  }
  if (has_construction) {
    const auto r = spectral_radius(distance_matrix(parse_graph6(construction_form)), opts);
    report.details["construction_lambda1"] = enclosure_json(r);
  }
}

Digraph random_digraph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) d.add_arc(u, v);
    }
  }
  return d;
}

}  // namespace

int default_thread_count() {
  const char* env = std::getenv("ESSSPEC_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 1024) return 1;
  return static_cast<int>(v);
}

// ------------------------------------------------------- MinimizerSet

void MinimizerSet::offer(const Graph& g, const SpectralResult& r) {
  if (r.lower > min_upper_) return;
  if (r.upper < min_upper_) {
    min_upper_ = r.upper;
    prune();
  }
  auto form = canonical_form(g).bytes;
  auto [it, inserted] = lowest_lower_.emplace(std::move(form), r.lower);
  if (!inserted) it->second = std::min(it->second, r.lower);
}

void MinimizerSet::merge(const MinimizerSet& other) {
  min_upper_ = std::min(min_upper_, other.min_upper_);
  for (const auto& [form, lower] : other.lowest_lower_) {
    auto [it, inserted] = lowest_lower_.emplace(form, lower);
    if (!inserted) it->second = std::min(it->second, lower);
  }
  prune();
}

void MinimizerSet::prune() {
  std::erase_if(lowest_lower_, [&](const auto& kv) { return kv.second > min_upper_; });
}

std::vector<std::string> MinimizerSet::forms() const {
  std::vector<std::string> out;
  for (const auto& [form, lower] : lowest_lower_) out.push_back(form);
  return out;
}

// ----------------------------------------------------------- theorems

VerificationReport verify_theorem1(int n, int kappa, const VerifyConfig& cfg) {
  const auto start = Clock::now();
  ExtremalSpec{Family::kTheorem1, n, kappa, {}, {}}.validate();
  check_enumeration_order(n, cfg.max_n);

  VerificationReport report;
  report.claim = "THM1";
  report.parameters = {{"n", n}, {"kappa", kappa}};
  const std::string construction = canonical_form(theorem1_extremal(n, kappa)).bytes;
  const auto outcome = run_exhaustive(n, cfg, [kappa](const Graph& g) {
    return essential_cut_size(g) == kappa;
  });
  finalize(report, outcome, construction, cfg);
  report.runtime_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_theorem2(int n, int kappa, int delta, const VerifyConfig& cfg) {
  const auto start = Clock::now();
  ExtremalSpec{Family::kTheorem2, n, kappa, delta, {}}.validate();
  check_enumeration_order(n, cfg.max_n);

  VerificationReport report;
  report.claim = "THM2";
  report.parameters = {{"n", n}, {"kappa", kappa}, {"delta", delta}};
  report.details["case"] = theorem2_case(kappa, delta) == Theorem2Case::kAttachedVertex
                               ? "attached_vertex"
                               : "join";
  std::string construction;
  try {
    construction = canonical_form(theorem2_extremal(n, kappa, delta)).bytes;
    report.details["construction_infeasible"] = false;
  } catch (const ConstructionInfeasible& e) {
    report.details["construction_infeasible"] = true;
    report.details["construction_error"] = e.what();
  }
  const auto outcome = run_exhaustive(n, cfg, [kappa, delta](const Graph& g) {
    return min_degree(g) == delta && essential_cut_size(g) == kappa;
  });
  finalize(report, outcome, construction, cfg);
  report.runtime_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_theorem3_family(int n, int k, const VerifyConfig& cfg) {
  const auto start = Clock::now();
  if (k < 1 || n < k + 4) throw InvalidArgument("thm3 needs k >= 1 and n >= k + 4");

  VerificationReport report;
  report.claim = "THM3";
  report.parameters = {{"n", n}, {"k", k}};
  const SpectralOptions opts{cfg.tol};
  const int last = n - k - 2;

  // (a) sweep over the family.
  std::map<int, SpectralResult> sweep;
  nlohmann::json rows = nlohmann::json::array();
  bool closed_forms_agree = true;
  double min_upper = std::numeric_limits<double>::infinity();
  for (int n1 = 2; n1 <= last; ++n1) {
    auto r = spectral_radius(directed_distance_matrix(theorem3_extremal(n, k, n1)), opts);
    const double closed = digraph_family_lambda1_closed_form(n, k, n1);
    const double rel = std::abs(r.lambda1 - closed) / closed;
    closed_forms_agree = closed_forms_agree && rel <= cfg.compare_tol;
    rows.push_back({{"n1", n1},
                    {"lambda1", enclosure_json(r)},
                    {"closed_form", closed},
                    {"relative_error", rel}});
    min_upper = std::min(min_upper, r.upper);
    sweep.emplace(n1, std::move(r));
  }
  std::vector<int> argmin;
  for (const auto& [n1, r] : sweep) {
    if (r.lower <= min_upper) argmin.push_back(n1);
  }
  std::vector<int> expected{2};
  if (last != 2) expected.push_back(last);

  const double b = n - 2.0;
  const double closed_min = (b + std::sqrt(b * b + 12.0 * n - 8.0 * k - 20.0)) / 2.0;
  const SpectralResult& low_end = sweep.at(2);
  const SpectralResult& high_end = sweep.at(last);
  const bool min_matches = std::abs(low_end.lambda1 - closed_min) <= cfg.compare_tol * closed_min;
  const bool ends_agree =
      std::abs(low_end.lambda1 - high_end.lambda1) <= cfg.compare_tol * low_end.lambda1;
  const bool family_ok = argmin == expected && closed_forms_agree && min_matches && ends_agree;

  std::set<std::string> minimizer_forms;
  for (int n1 : expected) minimizer_forms.insert(canonical_form(theorem3_extremal(n, k, n1)).bytes);

  report.candidates_examined = sweep.size();
  report.min_lambda1 = enclosure_of(low_end);
  report.construction_canonical = canonical_form(theorem3_extremal(n, k, 2)).bytes;
  report.minimizer_canonical = report.construction_canonical;
  report.details["sweep"] = rows;
  report.details["argmin_n1"] = argmin;
  report.details["expected_argmin_n1"] = expected;
  report.details["closed_form_min"] = closed_min;
  report.details["minimizers"] = std::vector<std::string>(minimizer_forms.begin(), minimizer_forms.end());
  report.details["family_ok"] = family_ok;

  // (b) random members of the whole class, small n only.
  bool sampling_ok = true;
  if (n <= 7 && cfg.samples > 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    static constexpr double kDensities[] = {0.3, 0.45, 0.6, 0.75, 0.9};
    std::uint64_t attempts = 0;
    std::uint64_t accepted = 0;
    std::uint64_t violations = 0;
    double min_sampled = std::numeric_limits<double>::infinity();
    nlohmann::json counterexamples = nlohmann::json::array();
    const double floor = closed_min - cfg.compare_tol;
    while (accepted < static_cast<std::uint64_t>(cfg.samples) && attempts < cfg.sample_budget) {
      const double density = kDensities[attempts % std::size(kDensities)];
      ++attempts;
      Digraph d = random_digraph(n, density, rng);
      if (!is_strongly_connected(d) || essential_cut_size(d) != k) continue;
      ++accepted;
      const auto r = spectral_radius(directed_distance_matrix(d), opts);
      min_sampled = std::min(min_sampled, r.lambda1);
      if (r.upper < floor) {
        ++violations;
        if (counterexamples.size() < 5) counterexamples.push_back(write_digraph6(d));
      }
    }
    const bool partial = accepted < static_cast<std::uint64_t>(cfg.samples);
    sampling_ok = violations == 0;
    report.candidates_examined += accepted;
    report.details["sampling"] = {{"requested", cfg.samples},
                                  {"accepted", accepted},
                                  {"attempts", attempts},
                                  {"budget", cfg.sample_budget},
                                  {"seed", cfg.seed},
                                  {"violations", violations},
                                  {"partial", partial},
                                  {"min_sampled_lambda1", accepted > 0 ? nlohmann::json(min_sampled)
                                                                       : nlohmann::json(nullptr)},
                                  {"counterexamples", counterexamples}};
  } else {
    report.details["sampling"] = nullptr;
  }

  report.extremal_matches = family_ok && sampling_ok;
  report.uniqueness = minimizer_forms.size() == 1;
  report.runtime_ms = elapsed_ms(start);
  return report;
}

}  // namespace essspec
