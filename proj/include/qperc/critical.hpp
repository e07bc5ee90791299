#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "qperc/cube.hpp"
#include "qperc/stats.hpp"

namespace qperc {

/// Replicates per midpoint double from `initial` up to `cap` until the
/// Gaussian interval mean ± z·se excludes the target.
struct ReplicateSchedule {
  std::size_t initial = 64;
  std::size_t cap = 8192;
  double z = 1.96;
  /// Total replicates over the whole solve before giving up.
  std::uint64_t budget = std::uint64_t{1} << 22;
  /// Extra bisection steps at the cap, after the bracket meets tol_p, spent
  /// bringing χ̂(p̂) within two standard errors of the target.
  int refine_steps = 40;
};

struct BisectionStep {
  int iteration = 0;
  double lo = 0.0;
  double hi = 0.0;
  double midpoint = 0.0;
  double chi_mean = 0.0;
  double chi_se = 0.0;
  std::size_t replicates = 0;
};

struct PcResult {
  int n = 0;
  double lambda = 0.0;
  double target = 0.0;
  double p_hat = 0.0;
  double ci_half_width = 0.0;
  std::size_t replicates_used = 0;
  Estimate chi_at_p_hat;
  bool converged = false;
  std::vector<BisectionStep> trace;

  /// |χ̂(p̂) - target| <= 2 se.
  bool chi_matches_target() const;
};

inline double pc_target(const CubeDim& dim, double lambda) { return lambda * std::exp2(dim.n() / 3.0); }

/// Default tolerance: a quarter of the window width 2^(-n/3)/n.
inline double default_tol_p(const CubeDim& dim) { return std::exp2(-dim.n() / 3.0) / (4.0 * dim.n()); }

/// Solves χ(p) = λ 2^(n/3) by bisection on [0,1] with coupled replicates
/// (replicate r always uses SeedSpec{master_seed, r}). Throws
/// std::invalid_argument if the target is outside [1, 2^n] or tol_p <= 0.
/// Budget exhaustion returns the current bracket with converged = false.
PcResult solve_pc(const CubeDim& dim, double lambda, double tol_p, const ReplicateSchedule& schedule,
                  std::uint64_t master_seed, int threads = 0);

/// Coupled χ̂ at p over replicates [0, count).
Estimate chi_at(const CubeDim& dim, double p, std::size_t count, std::uint64_t master_seed, int threads = 0);

enum class Regime { below, inside, above };
std::string_view regime_name(Regime r);

struct WindowCoord {
  double epsilon = 0.0;
  double Lambda = 0.0;
  Regime regime = Regime::inside;
};

inline constexpr double kDefaultWindowLambda = 10.0;

/// ε = n(p - p̂), Λ = ε 2^(n/3); inside when |Λ| <= lambda0.
WindowCoord window_coord(double p, int n, double p_hat, double lambda0 = kDefaultWindowLambda);
inline WindowCoord window_coord(double p, const PcResult& pc, double lambda0 = kDefaultWindowLambda) {
  return window_coord(p, pc.n, pc.p_hat, lambda0);
}

/// 1/n + 1/n^2 + 7/(2n^3); a reference value only.
double pc_expansion_reference(int n);

/// CSV: iteration,lo,hi,midpoint,chi_mean,chi_se,replicates
void write_trace_csv(std::ostream& out, const std::vector<BisectionStep>& trace);

}  // namespace qperc
