#include "qperc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "qperc/clusters.hpp"
#include "qperc/csv.hpp"
#include "qperc/parallel.hpp"

namespace qperc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Estimate nan_estimate(std::size_t replicates) { return Estimate{kNaN, kNaN, replicates}; }

double median_of(std::vector<std::uint32_t> values) {
  if (values.empty()) return kNaN;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2) return values[mid];
  return 0.5 * (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid]));
}

double mean_of(const std::vector<std::uint32_t>& values) {
  if (values.empty()) return kNaN;
  double sum = 0.0;
  for (auto v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

void SweepConfig::validate() const {
  CubeDim{n};
  if (replicates < 1) throw std::invalid_argument("sweep needs at least one replicate");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  for (double e : epsilon_grid)
    if (!std::isfinite(e)) throw std::invalid_argument("epsilon grid values must be finite");
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const CubeDim dim(cfg.n);
  const PcResult pc = solve_pc(dim, cfg.lambda, default_tol_p(dim), ReplicateSchedule{}, cfg.master_seed, cfg.threads);
  return run_sweep(cfg, pc);
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, const PcResult& pc) {
  cfg.validate();
  if (pc.n != cfg.n) throw std::invalid_argument("PcResult dimension does not match the sweep");
  const CubeDim dim(cfg.n);
  const double volume = static_cast<double>(dim.volume());
  const double log_v = cfg.n * std::log(2.0);

  std::vector<SweepRecord> records;
  records.reserve(cfg.epsilon_grid.size());
  for (double epsilon : cfg.epsilon_grid) {
    SweepRecord rec;
    rec.epsilon = epsilon;
    rec.p = pc.p_hat + epsilon / cfg.n;
    const WindowCoord w = window_coord(rec.p, pc, cfg.window_lambda0);
    rec.Lambda = w.Lambda;
    rec.regime = w.regime;
    rec.ref_subcritical = 2.0 * log_v / (epsilon * epsilon);
    rec.ref_supercritical = 2.0 * epsilon * volume;
    rec.ref_window = std::pow(volume, 2.0 / 3.0);
    if (!(rec.p >= 0.0 && rec.p <= 1.0)) {
      rec.skipped = true;
      rec.chi = rec.theta = rec.z_geq = nan_estimate(0);
      rec.cmax_mean = rec.cmax_median = rec.c2_mean = kNaN;
      records.push_back(std::move(rec));
      continue;
    }

    const bool supercritical = epsilon > 0.0;
    std::uint64_t cutoff = 0;
    if (supercritical) {
      rec.n_alpha = n_alpha(pc.p_hat, rec.p, cfg.n, cfg.alpha);
      cutoff = std::max<std::uint64_t>(1, n_alpha_cutoff(rec.n_alpha));
    }

    const std::size_t reps = cfg.replicates;
    rec.cmax_samples.resize(reps);
    rec.c2_samples.resize(reps);
    rec.chi_samples.resize(reps);
    std::vector<double> theta_samples(reps), z_samples(reps);
    std::vector<RadialProfile> profiles(cfg.observables.triangle ? reps : 0);
    parallel_for(reps, cfg.threads, [&](std::size_t r) {
      const auto labels = label_components(sample_subgraph(dim, rec.p, SeedSpec{cfg.master_seed, r}));
      const auto [c1, c2] = top_two(labels);
      rec.cmax_samples[r] = c1;
      rec.c2_samples[r] = c2;
      rec.chi_samples[r] = chi_statistic(labels);
      if (supercritical) {
        z_samples[r] = static_cast<double>(count_z_geq(labels, cutoff));
        theta_samples[r] = z_samples[r] / volume;
      }
      if (cfg.observables.triangle) profiles[r] = connected_pair_fraction(labels, cfg.pairs, r);
    });

    rec.chi = cfg.observables.chi ? Estimate::from_samples(rec.chi_samples) : nan_estimate(reps);
    rec.cmax_mean = cfg.observables.cmax ? mean_of(rec.cmax_samples) : kNaN;
    rec.cmax_median = cfg.observables.cmax ? median_of(rec.cmax_samples) : kNaN;
    rec.c2_mean = cfg.observables.c2 ? mean_of(rec.c2_samples) : kNaN;
    rec.theta = supercritical && cfg.observables.theta ? Estimate::from_samples(theta_samples) : nan_estimate(reps);
    rec.z_geq = supercritical && cfg.observables.z ? Estimate::from_samples(z_samples) : nan_estimate(reps);
    if (supercritical && cfg.observables.z) rec.z_concentration = z_concentration_check(z_samples, cfg.n, cfg.eta1);
    if (cfg.observables.triangle) {
      const double chi = Estimate::from_samples(rec.chi_samples).mean;
      rec.triangle = triangle_diagram_hat(average_profiles(profiles), chi, cfg.K1, cfg.K2, rec.p);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

SprinkleReport sprinkling_experiment(int n, double epsilon, double alpha, const SeedSpec& seed, double p_hat,
                                     const SprinkleOptions& options) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("sprinkling needs epsilon > 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  const CubeDim dim(n);
  SprinkleReport r;
  r.n = n;
  r.epsilon = epsilon;
  r.alpha = alpha;
  r.p = p_hat + epsilon / n;
  if (r.p > 1.0) throw std::invalid_argument("p = p_hat + epsilon/n exceeds 1");
  r.q = sprinkle_density(n, epsilon);
  r.p_minus = sprinkle_split(n, r.p, epsilon);

  const OccupiedGraph base = sample_subgraph(dim, r.p_minus, seed);
  const ClusterLabeling before = label_components(base);
  std::tie(r.cmax_before, r.c2_before) = top_two(before);

  r.big_threshold = static_cast<std::uint64_t>(std::ceil(std::exp2(alpha * n / 3.0)));
  for (std::uint32_t s : before.sizes_desc()) {
    if (s < r.big_threshold) break;
    ++r.big_components;
    r.M += s;
  }

  const OccupiedGraph merged =
      options.sprinkle_layer
          ? union_graphs(base, sample_subgraph(dim, r.q,
                                               SeedSpec{derive_stream_seed(seed.master_seed, kSprinkleStream),
                                                        seed.replicate_index}))
          : base;
  const ClusterLabeling after = label_components(merged);
  std::tie(r.cmax_after, r.c2_after) = top_two(after);

  std::unordered_map<std::uint32_t, std::uint64_t> d_per_root;
  for (Vertex v = 0; v < dim.volume(); ++v)
    if (before.cluster_size_of(v) >= r.big_threshold) ++d_per_root[after.root_of(v)];
  for (const auto& [root, count] : d_per_root) r.d_in_largest = std::max(r.d_in_largest, count);

  r.merged_fraction = r.M > 0 ? static_cast<double>(r.cmax_after) / static_cast<double>(r.M) : 0.0;
  r.c1_observed = static_cast<double>(r.cmax_after) / (epsilon * static_cast<double>(dim.volume()));
  return r;
}

DualityReport duality_experiment(int n, double epsilon, std::size_t replicates, std::uint64_t master_seed,
                                 double p_hat, int threads) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("duality needs epsilon > 0");
  if (replicates < 1) throw std::invalid_argument("duality needs at least one replicate");
  const CubeDim dim(n);
  DualityReport d;
  d.n = n;
  d.epsilon = epsilon;
  d.p_above = std::clamp(p_hat + epsilon / n, 0.0, 1.0);
  d.p_below = std::clamp(p_hat - epsilon / n, 0.0, 1.0);
  d.c2_above.resize(replicates);
  d.cmax_below.resize(replicates);
  parallel_for(replicates, threads, [&](std::size_t r) {
    d.c2_above[r] = top_two(label_components(sample_subgraph(dim, d.p_above, SeedSpec{master_seed, r}))).second;
    d.cmax_below[r] = top_two(label_components(sample_subgraph(dim, d.p_below, SeedSpec{master_seed, r}))).first;
  });
  d.c2_above_mean = mean_of(d.c2_above);
  d.cmax_below_mean = mean_of(d.cmax_below);
  d.ratio = d.c2_above_mean / d.cmax_below_mean;
  return d;
}

double ExactOracle::p_geq(std::uint64_t k) const {
  double total = 0.0;
  for (std::size_t s = static_cast<std::size_t>(std::min<std::uint64_t>(k, cluster_size_pmf.size()));
       s < cluster_size_pmf.size(); ++s)
    total += cluster_size_pmf[s];
  return total;
}

ExactOracle exact_enumerate(int n, double p) {
  if (n < 1 || n > 3) throw std::invalid_argument("exact_enumerate supports n in {1, 2, 3}");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
  const CubeDim dim(n);
  const int volume = static_cast<int>(dim.volume());

  std::vector<std::pair<int, int>> edges;
  for (int d = 0; d < n; ++d)
    for (int v = 0; v < volume; ++v)
      if (!((v >> d) & 1)) edges.emplace_back(v, v | (1 << d));
  const int m = static_cast<int>(edges.size());

  std::vector<double> occupied_pow(m + 1), vacant_pow(m + 1);
  for (int k = 0; k <= m; ++k) {
    occupied_pow[k] = std::pow(p, k);
    vacant_pow[k] = std::pow(1.0 - p, m - k);
  }

  KahanSum chi, cmax;
  std::vector<KahanSum> pmf(static_cast<std::size_t>(volume + 1));
  std::vector<int> parent(volume), size(volume);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(size.begin(), size.end(), 1);
    for (int e = 0; e < m; ++e) {
      if (!((mask >> e) & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) continue;
      if (size[a] < size[b]) std::swap(a, b);
      parent[b] = a;
      size[a] += size[b];
    }
    const double weight = occupied_pow[std::popcount(mask)] * vacant_pow[std::popcount(mask)];
    int squares = 0, largest = 0;
    for (int v = 0; v < volume; ++v) {
      if (find(v) != v) continue;
      squares += size[v] * size[v];
      largest = std::max(largest, size[v]);
    }
    chi.add(weight * squares / volume);
    cmax.add(weight * largest);
    pmf[static_cast<std::size_t>(size[find(0)])].add(weight);
  }

  ExactOracle out;
  out.n = n;
  out.p = p;
  out.chi_exact = chi.sum;
  out.e_cmax_exact = cmax.sum;
  for (const auto& s : pmf) out.cluster_size_pmf.push_back(s.sum);
  return out;
}

std::vector<SummaryLine> regime_summary(const std::vector<SweepRecord>& records) {
  std::vector<SummaryLine> lines;
  for (Regime regime : {Regime::below, Regime::inside, Regime::above}) {
    const std::string name(regime_name(regime));
    for (const auto& r : records) {
      if (r.skipped || r.regime != regime) continue;
      switch (regime) {
        case Regime::below:
          lines.push_back({name, r.epsilon, "cmax_over_2logV_eps2", r.cmax_mean / r.ref_subcritical});
          break;
        case Regime::inside:
          lines.push_back({name, r.epsilon, "cmax_over_V23", r.cmax_mean / r.ref_window});
          break;
        case Regime::above: {
          lines.push_back({name, r.epsilon, "cmax_over_2epsV", r.cmax_mean / r.ref_supercritical});
          const double four_eps2_v = 2.0 * r.epsilon * r.ref_supercritical;
          lines.push_back({name, r.epsilon, "chi_over_4eps2V", r.chi.mean / four_eps2_v});
          break;
        }
      }
      if (r.triangle) {
        lines.push_back({name, r.epsilon, "triangle_offdiag", r.triangle->nabla_offdiag});
        lines.push_back({name, r.epsilon, "triangle_a0", r.triangle->a0});
        lines.push_back({name, r.epsilon, "triangle_offdiag_within_a0", r.triangle->offdiag_within_a0() ? 1.0 : 0.0});
      }
    }
  }
  return lines;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  csv::write_header(out, {"epsilon", "Lambda", "p", "regime", "skipped", "chi_mean", "chi_se", "cmax_mean",
                          "cmax_median", "c2_mean", "n_alpha", "theta_mean", "theta_se", "z_mean", "z_se",
                          "z_exceed_freq", "ref_2logV_eps2", "ref_2epsV", "ref_V23", "nabla_diag", "nabla_offdiag",
                          "a0", "replicates"});
  for (const auto& r : records) {
    csv::Row row;
    row << r.epsilon << r.Lambda << r.p << regime_name(r.regime) << r.skipped << r.chi.mean << r.chi.std_error
        << r.cmax_mean << r.cmax_median << r.c2_mean << r.n_alpha << r.theta.mean << r.theta.std_error
        << r.z_geq.mean << r.z_geq.std_error << (r.z_concentration ? r.z_concentration->exceed_frequency : kNaN)
        << r.ref_subcritical << r.ref_supercritical << r.ref_window
        << (r.triangle ? r.triangle->nabla_diag : kNaN) << (r.triangle ? r.triangle->nabla_offdiag : kNaN)
        << (r.triangle ? r.triangle->a0 : kNaN) << r.cmax_samples.size();
    csv::write_row(out, row);
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryLine>& lines) {
  csv::write_header(out, {"regime", "epsilon", "quantity", "value"});
  for (const auto& l : lines) {
    csv::Row row;
    row << l.regime << l.epsilon << l.quantity << l.value;
    csv::write_row(out, row);
  }
}

void write_sprinkle_csv(std::ostream& out, const std::vector<SprinkleReport>& reports) {
  csv::write_header(out, {"n", "epsilon", "alpha", "p", "p_minus", "q", "big_threshold", "big_components", "M",
                          "cmax_before", "c2_before", "cmax_after", "c2_after", "d_in_largest", "merged_fraction",
                          "c1_observed", "proof_target_met"});
  for (const auto& r : reports) {
    csv::Row row;
    row << r.n << r.epsilon << r.alpha << r.p << r.p_minus << r.q << r.big_threshold << r.big_components << r.M
        << r.cmax_before << r.c2_before << r.cmax_after << r.c2_after << r.d_in_largest << r.merged_fraction
        << r.c1_observed << r.proof_target_met();
    csv::write_row(out, row);
  }
}

void write_duality_csv(std::ostream& out, const std::vector<DualityReport>& reports) {
  csv::write_header(out, {"epsilon", "replicate", "p_above", "c2_above", "p_below", "cmax_below"});
  for (const auto& report : reports) {
    for (std::size_t r = 0; r < report.c2_above.size(); ++r) {
      csv::Row row;
      row << report.epsilon << r << report.p_above << report.c2_above[r] << report.p_below << report.cmax_below[r];
      csv::write_row(out, row);
    }
  }
}

}  // namespace qperc
