#include "essspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "essspec/errors.hpp"

namespace essspec {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)), symmetric_(true) {
  if (n < 1) throw InvalidArgument("distance matrix needs n >= 1");
  if (entries_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgument("distance matrix entry count mismatch");
  }
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0) throw InvalidArgument("distance matrix diagonal must be zero");
    for (int j = 0; j < n_; ++j) {
      if (i != j && at(i, j) < 1) {
        throw InvalidArgument("off-diagonal distances must be >= 1");
      }
      if (at(i, j) != at(j, i)) symmetric_ = false;
    }
  }
}

DistanceMatrix DistanceMatrix::transposed() const {
  std::vector<int> t(entries_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t[static_cast<std::size_t>(j) * n_ + i] = at(i, j);
  }
  return DistanceMatrix(n_, std::move(t));
}

namespace {

template <typename G>
DistanceMatrix build_distances(const G& g) {
  const int n = g.order();
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> row = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (row[t] == kUnreachable) {
        throw NotConnected("no path from vertex " + std::to_string(s) +
                               " to vertex " + std::to_string(t),
                           s, t);
      }
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

}  // namespace

DistanceMatrix distance_matrix(const Graph& g) { return build_distances(g); }

DistanceMatrix directed_distance_matrix(const Digraph& d) {
  return build_distances(d);
}

SpectralResult spectral_radius(const DistanceMatrix& d,
                               const SpectralOptions& options) {
  const int n = d.order();
  SpectralResult result;
  if (n == 1) {
    result.perron = {1.0};
    return result;
  }
  if (!(options.tol > 0.0)) throw InvalidArgument("tolerance must be positive");

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  // Rounding in one row product is at most ~n ulps of the row sum; the
  // enclosure is widened by that much and cannot be made narrower.
  const double slack = 4.0 * (n + 2) * kEps;
  const double target = std::max(options.tol, 4.0 * slack);

  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  for (int it = 1; it <= options.max_iterations; ++it) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double ymax = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto row = d.row(i);
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      y[i] = acc;
      const double ratio = acc / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      ymax = std::max(ymax, acc);
    }
    lo *= 1.0 - slack;
    hi *= 1.0 + slack;
    result.iterations = it;
    result.lower = lo;
    result.upper = hi;

    if (hi - lo <= target * hi) {
      double estimate = 0.5 * (lo + hi);
      if (d.is_symmetric()) {
        double xy = 0.0;
        double xx = 0.0;
        for (int i = 0; i < n; ++i) {
          xy += x[i] * y[i];
          xx += x[i] * x[i];
        }
        estimate = std::clamp(xy / xx, lo, hi);
      }
      double norm = 0.0;
      for (double v : x) norm += v * v;
      norm = std::sqrt(norm);
      result.lambda1 = estimate;
      result.perron.resize(n);
      double residual = 0.0;
      for (int i = 0; i < n; ++i) {
        result.perron[i] = x[i] / norm;
        residual = std::max(residual, std::abs(y[i] - estimate * x[i]) / norm);
      }
      result.residual = residual;
      return result;
    }
    for (int i = 0; i < n; ++i) x[i] = y[i] / ymax;
  }
  throw NonConvergence("power iteration did not converge within " +
                           std::to_string(options.max_iterations) + " iterations",
                       result.lower, result.upper, result.iterations);
}

std::pair<SpectralResult, SpectralResult> separate_enclosures(
    const DistanceMatrix& a, const DistanceMatrix& b,
    const SpectralOptions& options, double floor_tol) {
  SpectralOptions opts = options;
  for (;;) {
    SpectralResult ra = spectral_radius(a, opts);
    SpectralResult rb = spectral_radius(b, opts);
    const bool separated = ra.certainly_below(rb) || rb.certainly_below(ra);
    if (separated || opts.tol <= floor_tol) return {std::move(ra), std::move(rb)};
    opts.tol = std::max(opts.tol / 10.0, floor_tol);
  }
}

double digraph_family_lambda1_closed_form(int n, int k, int n1) {
  if (k < 1 || n1 < 2 || n1 > n - k - 2) {
    throw InvalidArgument("closed form needs k >= 1 and 2 <= n1 <= n-k-2");
  }
  const double b = n - 2.0;
  const double c = static_cast<double>(n1) * (n - k - n1) + n - 1.0;
  return (b + std::sqrt(b * b + 4.0 * c)) / 2.0;
}

}  // namespace essspec
