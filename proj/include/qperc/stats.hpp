#pragma once

// Estimators for the cluster observables. Every estimator reduces a
// per-replicate statistic; variances are taken across replicates only, since
// cluster sizes within one configuration are dependent.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qperc/clusters.hpp"

namespace qperc {

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t replicates = 0;

  /// Mean and standard error of the mean, summed in index order.
  /// Throws std::invalid_argument on empty input.
  static Estimate from_samples(std::span<const double> samples);
};

// Per-replicate statistics.
double chi_statistic(const ClusterLabeling& labels);
double p_geq_k_statistic(const ClusterLabeling& labels, std::uint64_t k);

/// χ = 2^-n E[Σ_i |C_i|^2].
Estimate chi_hat(std::span<const ClusterLabeling> labelings, int threads = 0);
/// P_{>=k} = E[Z_{>=k}] / 2^n.
Estimate p_geq_k_hat(std::span<const ClusterLabeling> labelings, std::uint64_t k, int threads = 0);

/// N_α = ε^(α-2) 2^(nα/3) with ε = n(p - p_c). Throws for ε <= 0 or α ∉ (0,1).
double n_alpha(double p_c, double p, int n, double alpha);

/// Integer cluster-size cutoff used for a real N_α.
std::uint64_t n_alpha_cutoff(double n_alpha_value);

/// θ_α = P_{>=ceil(N_α)}.
Estimate theta_alpha_hat(std::span<const ClusterLabeling> labelings, double n_alpha_value, int threads = 0);

/// A function of Hamming distance k = 0..n.
struct RadialProfile {
  int n = 0;
  std::vector<double> values;

  static RadialProfile delta0(int n);
  static RadialProfile constant(int n, double value);
  double operator()(int k) const { return values[static_cast<std::size_t>(k)]; }
};

/// Intersection numbers of the Hamming scheme: for ρ(x,y) = k, N(k,i,j)
/// counts w with ρ(x,w) = i and ρ(w,y) = j.
class HammingScheme {
 public:
  explicit HammingScheme(int n);
  static std::shared_ptr<const HammingScheme> cached(int n);

  int n() const { return n_; }
  std::uint64_t intersection(int k, int i, int j) const {
    const auto m = static_cast<std::size_t>(n_ + 1);
    return table_[(static_cast<std::size_t>(k) * m + static_cast<std::size_t>(i)) * m + static_cast<std::size_t>(j)];
  }

 private:
  int n_;
  std::vector<std::uint64_t> table_;
};

struct PairCensusOptions {
  /// Exact per-component census up to this dimension, sampled pairs beyond.
  int exact_max_n = 16;
  std::uint64_t sampled_pairs = 1'000'000;
  std::uint64_t seed = 0;
};

/// Fraction of ordered pairs at each distance that lie in the same
/// component, for one configuration.
RadialProfile connected_pair_fraction(const ClusterLabeling& labels, const PairCensusOptions& options = {},
                                      std::uint64_t replicate_index = 0);

/// Plug-in estimate of τ_p as a radial profile, averaged over replicates.
RadialProfile two_point_radial_hat(std::span<const ClusterLabeling> labelings, const PairCensusOptions& options = {},
                                   int threads = 0);

/// Mean of per-replicate profiles, in index order.
RadialProfile average_profiles(std::span<const RadialProfile> profiles);

/// (t1 * t2)(k) = Σ_{i,j} N(k,i,j) t1(i) t2(j). Throws on dimension mismatch.
RadialProfile radial_convolution(const RadialProfile& t1, const RadialProfile& t2);

struct TriangleReport {
  double p = 0.0;
  double nabla_diag = 0.0;
  double nabla_offdiag = 0.0;
  double a0 = 0.0;
  double K1 = 1.0;
  double K2 = 1.0;
  double chi_used = 0.0;
  std::vector<double> nabla;  // ∇(k), k = 0..n

  bool offdiag_within_a0() const { return nabla_offdiag <= a0; }
};

/// ∇ = t * t * t; a0 = K1/n + K2 χ^3 / 2^n.
TriangleReport triangle_diagram_hat(const RadialProfile& profile, double chi, double K1 = 1.0, double K2 = 1.0,
                                    double p = 0.0);

struct ZConcentrationReport {
  double z_mean = 0.0;
  double theta = 0.0;
  double threshold = 0.0;  // V^(1-η1) θ
  double exceed_frequency = 0.0;
  std::size_t replicates = 0;
};

/// Empirical frequency of |Z_{>=N_α} - mean| >= V^(1-η1) θ̂_α.
ZConcentrationReport z_concentration_check(std::span<const double> z_values, int n, double eta1);
ZConcentrationReport z_concentration_check(std::span<const ClusterLabeling> labelings, double n_alpha_value,
                                           double eta1);

}  // namespace qperc
