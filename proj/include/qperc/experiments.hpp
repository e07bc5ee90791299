#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qperc/critical.hpp"
#include "qperc/gen.hpp"
#include "qperc/stats.hpp"

namespace qperc {

struct ObservableFlags {
  bool chi = true;
  bool cmax = true;
  bool c2 = true;
  bool theta = true;
  bool z = true;
  bool triangle = false;
};

struct SweepConfig {
  int n = 12;
  double lambda = 0.1;
  double alpha = 0.5;
  std::vector<double> epsilon_grid;
  std::size_t replicates = 100;
  std::uint64_t master_seed = 1;
  ObservableFlags observables;
  double K1 = 1.0;
  double K2 = 1.0;
  double window_lambda0 = kDefaultWindowLambda;
  double eta1 = 0.1;
  PairCensusOptions pairs;
  int threads = 0;

  /// Throws std::invalid_argument on non-finite grid values, zero
  /// replicates, or alpha outside (0,1).
  void validate() const;
};

struct SweepRecord {
  double epsilon = 0.0;
  double Lambda = 0.0;
  double p = 0.0;
  Regime regime = Regime::inside;
  /// p fell outside [0,1]; no observables were measured.
  bool skipped = false;

  Estimate chi;
  double cmax_mean = 0.0;
  double cmax_median = 0.0;
  double c2_mean = 0.0;
  double n_alpha = std::nan("");
  Estimate theta;  // NaN mean when ε <= 0
  Estimate z_geq;  // NaN mean when ε <= 0

  double ref_subcritical = 0.0;    // 2 log V / ε^2
  double ref_supercritical = 0.0;  // 2 ε V
  double ref_window = 0.0;         // V^(2/3)

  std::optional<TriangleReport> triangle;
  std::optional<ZConcentrationReport> z_concentration;  // ε > 0 rows only

  // Per-replicate values, replicate order.
  std::vector<std::uint32_t> cmax_samples;
  std::vector<std::uint32_t> c2_samples;
  std::vector<double> chi_samples;
};

/// Rows at p = p̂ + ε/n in grid order; replicate r uses SeedSpec{seed, r} in
/// every row, so rows are coupled.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, const PcResult& pc);
/// Solves p̂ inline with the default schedule first.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

struct SprinkleReport {
  int n = 0;
  double epsilon = 0.0;
  double alpha = 0.0;
  double p = 0.0;
  double p_minus = 0.0;
  double q = 0.0;
  std::uint64_t big_threshold = 0;  // ceil(2^(αn/3))
  std::uint64_t big_components = 0;  // |I|
  std::uint64_t M = 0;
  std::uint32_t cmax_before = 0;
  std::uint32_t c2_before = 0;
  std::uint32_t cmax_after = 0;
  std::uint32_t c2_after = 0;
  /// Largest number of D-vertices sharing one component of G⁻ ∪ H.
  std::uint64_t d_in_largest = 0;
  double merged_fraction = 0.0;  // cmax_after / M, 0 when M = 0
  double c1_observed = 0.0;      // cmax_after / (ε V)

  /// The sprinkling target: one component holding >= M/3 vertices of D.
  bool proof_target_met() const { return 3 * d_in_largest >= M; }
};

struct SprinkleOptions {
  /// Drop the H layer (used to check G⁻ against a plain run at p⁻).
  bool sprinkle_layer = true;
};

/// G⁻ uses `seed`; H uses an independent stream derived from it.
/// Throws std::invalid_argument for ε <= 0, α ∉ (0,1), p > 1, or
/// ε/(2n) > p.
SprinkleReport sprinkling_experiment(int n, double epsilon, double alpha, const SeedSpec& seed, double p_hat,
                                     const SprinkleOptions& options = {});

inline constexpr std::uint64_t kSprinkleStream = 0x5350524Eull;

struct DualityReport {
  int n = 0;
  double epsilon = 0.0;
  double p_above = 0.0;
  double p_below = 0.0;
  std::vector<std::uint32_t> c2_above;
  std::vector<std::uint32_t> cmax_below;
  double c2_above_mean = 0.0;
  double cmax_below_mean = 0.0;
  double ratio = 0.0;  // c2_above_mean / cmax_below_mean
};

/// |C_2| at p̂ + ε/n against |C_max| at p̂ - ε/n on matched replicates;
/// both densities are clamped to [0,1].
DualityReport duality_experiment(int n, double epsilon, std::size_t replicates, std::uint64_t master_seed,
                                 double p_hat, int threads = 0);

struct ExactOracle {
  int n = 0;
  double p = 0.0;
  double chi_exact = 0.0;
  double e_cmax_exact = 0.0;
  /// pmf[k] = P(|C(0)| = k), k = 0..2^n.
  std::vector<double> cluster_size_pmf;

  double p_geq(std::uint64_t k) const;
};

/// Exact expectations by enumerating all 2^(n 2^(n-1)) configurations.
/// Throws std::invalid_argument unless n in {1,2,3} and p in [0,1].
ExactOracle exact_enumerate(int n, double p);

struct SummaryLine {
  std::string regime;
  double epsilon = 0.0;
  std::string quantity;
  double value = 0.0;
};

/// below: cmax/(2 log V/ε²); inside: cmax/V^(2/3); above: cmax/(2εV) and
/// χ/(4ε²V); rows with a triangle report add ∇ off-diagonal and a0.
std::vector<SummaryLine> regime_summary(const std::vector<SweepRecord>& records);

// CSV emitters, header row first.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SummaryLine>& lines);
void write_sprinkle_csv(std::ostream& out, const std::vector<SprinkleReport>& reports);
void write_duality_csv(std::ostream& out, const std::vector<DualityReport>& reports);

}  // namespace qperc
