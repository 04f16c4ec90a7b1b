#pragma once

#include <span>
#include <vector>

#include "essspec/graph.hpp"

namespace essspec {

/// Dense matrix of shortest-path lengths with zero diagonal.
class DistanceMatrix {
 public:
  /// Row-major entries; checks zero diagonal and positive off-diagonal.
  DistanceMatrix(int n, std::vector<int> entries);

  int order() const { return n_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const int> row(int i) const {
    return std::span<const int>(entries_).subspan(static_cast<std::size_t>(i) * n_, n_);
  }
  std::span<const int> entries() const { return entries_; }
  /// True iff the matrix equals its transpose.
  bool is_symmetric() const { return symmetric_; }
  DistanceMatrix transposed() const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  int n_;
  std::vector<int> entries_;
  bool symmetric_;
};

/// Throws NotConnected if g is disconnected.
DistanceMatrix distance_matrix(const Graph& g);
/// Throws NotConnected, carrying an ordered pair with no directed path,
/// if d is not strongly connected.
DistanceMatrix directed_distance_matrix(const Digraph& d);

struct SpectralOptions {
  /// Target relative width (upper - lower) / lambda1 of the enclosure.
  double tol = 1e-12;
  int max_iterations = 100000;
};

/// Spectral radius of a distance matrix with a Collatz-Wielandt enclosure.
///
/// `lower` and `upper` are min_i (Dx)_i / x_i and max_i (Dx)_i / x_i at the
/// final iterate, widened by a few ulps per row to cover rounding in the
/// products, so lower <= lambda1(D) <= upper holds for the exact value.
struct SpectralResult {
  double lambda1 = 0.0;
  /// Positive, unit Euclidean norm.
  std::vector<double> perron;
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
  /// || D * perron - lambda1 * perron ||_inf
  double residual = 0.0;

  double width() const { return upper - lower; }
  /// The exact value of this result lies strictly below that of `other`.
  bool certainly_below(const SpectralResult& other) const {
    return upper < other.lower;
  }
};

/// Power iteration from the all-ones vector, normalised in the max-norm.
/// Throws NonConvergence after max_iterations.
SpectralResult spectral_radius(const DistanceMatrix& d,
                               const SpectralOptions& options = {});

/// Runs spectral_radius at `options.tol` and, while the two enclosures
/// overlap, again at 10x tighter tolerance down to `floor_tol`. Returns the
/// last pair computed.
std::pair<SpectralResult, SpectralResult> separate_enclosures(
    const DistanceMatrix& a, const DistanceMatrix& b,
    const SpectralOptions& options = {}, double floor_tol = 1e-14);

/// Full spectrum of a symmetric distance matrix (n <= 64) by cyclic Jacobi
/// rotations, sorted descending. Throws Unsupported on asymmetric input.
std::vector<double> dense_eigen_oracle(const DistanceMatrix& d);

/// Largest root of x^2 - (n-2) x - n1 (n-k-n1) - n + 1 = 0, the spectral
/// radius of the distance matrix of theorem3_extremal(n, k, n1).
/// Requires k >= 1 and 2 <= n1 <= n-k-2.
double digraph_family_lambda1_closed_form(int n, int k, int n1);

}  // namespace essspec
