#include "qperc/critical.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qperc/clusters.hpp"
#include "qperc/csv.hpp"
#include "qperc/gen.hpp"
#include "qperc/parallel.hpp"

namespace qperc {

namespace {

// Coupled per-replicate χ statistics at one p, grown on demand.
class ChiSamples {
 public:
  ChiSamples(const CubeDim& dim, double p, std::uint64_t master_seed, int threads)
      : dim_(dim), p_(p), seed_(master_seed), threads_(threads) {}

  void grow_to(std::size_t count) {
    const std::size_t old = samples_.size();
    if (count <= old) return;
    samples_.resize(count);
    parallel_for(count - old, threads_, [&](std::size_t i) {
      const std::size_t r = old + i;
      const auto g = sample_subgraph(dim_, p_, SeedSpec{seed_, r});
      samples_[r] = chi_statistic(label_components(g));
    });
  }

  std::size_t size() const { return samples_.size(); }
  Estimate estimate() const { return Estimate::from_samples(samples_); }

 private:
  CubeDim dim_;
  double p_;
  std::uint64_t seed_;
  int threads_;
  std::vector<double> samples_;
};

}  // namespace

bool PcResult::chi_matches_target() const {
  return std::abs(chi_at_p_hat.mean - target) <= 2.0 * chi_at_p_hat.std_error;
}

Estimate chi_at(const CubeDim& dim, double p, std::size_t count, std::uint64_t master_seed, int threads) {
  ChiSamples s(dim, p, master_seed, threads);
  s.grow_to(count);
  return s.estimate();
}

PcResult solve_pc(const CubeDim& dim, double lambda, double tol_p, const ReplicateSchedule& schedule,
                  std::uint64_t master_seed, int threads) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(tol_p > 0.0)) throw std::invalid_argument("tol_p must be positive");
  if (schedule.initial == 0 || schedule.cap < schedule.initial)
    throw std::invalid_argument("replicate schedule needs 0 < initial <= cap");

  PcResult result;
  result.n = dim.n();
  result.lambda = lambda;
  result.target = pc_target(dim, lambda);
  const double volume = static_cast<double>(dim.volume());
  constexpr double kRelEps = 1e-12;
  if (result.target < 1.0 - kRelEps || result.target > volume * (1.0 + kRelEps))
    throw std::invalid_argument("target chi = lambda 2^(n/3) outside [1, 2^n]");

  // χ(0) = 1 and χ(1) = V hold exactly, with no sampling error.
  if (std::abs(result.target - 1.0) <= kRelEps || std::abs(result.target - volume) <= kRelEps * volume) {
    const bool at_zero = std::abs(result.target - 1.0) <= kRelEps;
    result.p_hat = at_zero ? 0.0 : 1.0;
    result.chi_at_p_hat = Estimate{at_zero ? 1.0 : volume, 0.0, 1};
    result.converged = true;
    return result;
  }

  double lo = 0.0;
  double hi = 1.0;
  int iteration = 0;
  std::uint64_t spent = 0;

  auto evaluate = [&](double p, std::size_t start, bool adaptive) {
    ChiSamples samples(dim, p, master_seed, threads);
    std::size_t count = start;
    for (;;) {
      const std::size_t before = samples.size();
      samples.grow_to(count);
      spent += samples.size() - before;
      const Estimate e = samples.estimate();
      const bool resolved = std::abs(e.mean - result.target) > schedule.z * e.std_error;
      if (!adaptive || resolved || count >= schedule.cap || spent >= schedule.budget) return e;
      count = std::min(count * 2, schedule.cap);
    }
  };
  auto record = [&](double mid, const Estimate& e) {
    result.trace.push_back(BisectionStep{iteration++, lo, hi, mid, e.mean, e.std_error, e.replicates});
  };

  while (hi - lo > tol_p) {
    if (spent >= schedule.budget) {
      result.p_hat = 0.5 * (lo + hi);
      result.ci_half_width = 0.5 * (hi - lo);
      result.replicates_used = spent;
      result.converged = false;
      return result;
    }
    const double mid = 0.5 * (lo + hi);
    const Estimate e = evaluate(mid, schedule.initial, true);
    record(mid, e);
    (e.mean < result.target ? lo : hi) = mid;
  }

  result.p_hat = 0.5 * (lo + hi);
  result.chi_at_p_hat = evaluate(result.p_hat, schedule.cap, false);
  for (int step = 0; step < schedule.refine_steps && !result.chi_matches_target() && spent < schedule.budget;
       ++step) {
    record(result.p_hat, result.chi_at_p_hat);
    (result.chi_at_p_hat.mean < result.target ? lo : hi) = result.p_hat;
    result.p_hat = 0.5 * (lo + hi);
    result.chi_at_p_hat = evaluate(result.p_hat, schedule.cap, false);
  }
  record(result.p_hat, result.chi_at_p_hat);
  result.ci_half_width = 0.5 * (hi - lo);
  result.replicates_used = spent;
  result.converged = result.chi_matches_target();
  return result;
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::below:
      return "below";
    case Regime::inside:
      return "inside";
    case Regime::above:
      return "above";
  }
  return "inside";
}

WindowCoord window_coord(double p, int n, double p_hat, double lambda0) {
  WindowCoord w;
  w.epsilon = n * (p - p_hat);
  w.Lambda = w.epsilon * std::exp2(n / 3.0);
  w.regime = w.Lambda < -lambda0 ? Regime::below : (w.Lambda > lambda0 ? Regime::above : Regime::inside);
  return w;
}

double pc_expansion_reference(int n) {
  if (n < 1) throw std::invalid_argument("pc_expansion_reference needs n >= 1");
  const double x = 1.0 / n;
  return x + x * x + 3.5 * x * x * x;
}

void write_trace_csv(std::ostream& out, const std::vector<BisectionStep>& trace) {
  csv::write_header(out, {"iteration", "lo", "hi", "midpoint", "chi_mean", "chi_se", "replicates"});
  for (const auto& s : trace) {
    csv::Row row;
    row << s.iteration << s.lo << s.hi << s.midpoint << s.chi_mean << s.chi_se << s.replicates;
    csv::write_row(out, row);
  }
}

}  // namespace qperc
