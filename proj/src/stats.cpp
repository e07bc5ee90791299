#include "qperc/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "qperc/parallel.hpp"

namespace qperc {

namespace {

void check_nonempty(std::span<const ClusterLabeling> labelings) {
  if (labelings.empty()) throw std::invalid_argument("estimator needs at least one labeling");
  for (const auto& l : labelings)
    if (!(l.dim() == labelings.front().dim())) throw std::invalid_argument("labelings of different dimension");
}

template <class Stat>
Estimate reduce(std::span<const ClusterLabeling> labelings, int threads, Stat&& stat) {
  check_nonempty(labelings);
  std::vector<double> samples(labelings.size());
  parallel_for(labelings.size(), threads, [&](std::size_t i) { samples[i] = stat(labelings[i]); });
  return Estimate::from_samples(samples);
}

// In-place Walsh-Hadamard transform (unnormalised).
void walsh_hadamard(std::vector<std::int64_t>& a) {
  for (std::size_t len = 1; len < a.size(); len <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t u = a[j];
        const std::int64_t v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
    }
  }
}

// Ordered connected pairs at each distance, counted exactly. Small
// components enumerate their pairs; large ones use the autocorrelation
// A(z) = #{x in C : x^z in C} = WHT^-1(WHT(1_C)^2)(z).
std::vector<double> exact_pair_census(const ClusterLabeling& labels) {
  const int n = labels.dim().n();
  const std::size_t volume = static_cast<std::size_t>(labels.dim().volume());
  std::vector<std::uint64_t> census(static_cast<std::size_t>(n + 1), 0);
  const double transform_cost = (2.0 * n + 1.0) * static_cast<double>(volume);
  std::vector<std::int64_t> buffer;
  for (const auto& comp : labels.components()) {
    const double size = static_cast<double>(comp.size());
    if (size * size / 2.0 <= transform_cost) {
      census[0] += comp.size();
      for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = a + 1; b < comp.size(); ++b) census[std::popcount(comp[a] ^ comp[b])] += 2;
      continue;
    }
    buffer.assign(volume, 0);
    for (Vertex v : comp) buffer[v] = 1;
    walsh_hadamard(buffer);
    for (auto& x : buffer) x *= x;
    walsh_hadamard(buffer);
    const int shift = n;
    for (std::size_t z = 0; z < volume; ++z)
      census[std::popcount(z)] += static_cast<std::uint64_t>(buffer[z] >> shift);
  }
  std::vector<double> out(census.size());
  for (int k = 0; k <= n; ++k)
    out[k] = static_cast<double>(census[k]) / (static_cast<double>(volume) * static_cast<double>(binomial(n, k)));
  return out;
}

std::vector<double> sampled_pair_fraction(const ClusterLabeling& labels, const PairCensusOptions& options,
                                          std::uint64_t replicate_index) {
  const int n = labels.dim().n();
  const std::uint64_t volume = labels.dim().volume();
  std::vector<double> out(static_cast<std::size_t>(n + 1), 0.0);
  out[0] = 1.0;
  const std::uint64_t per_distance = std::max<std::uint64_t>(1, options.sampled_pairs / static_cast<std::uint64_t>(n));
  std::mt19937_64 rng(derive_stream_seed(options.seed, replicate_index));
  std::uniform_int_distribution<Vertex> pick_vertex(0, volume - 1);
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < per_distance; ++s) {
      const Vertex x = pick_vertex(rng);
      for (int i = 0; i < n; ++i) coords[i] = i;
      Vertex mask = 0;
      for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(coords[i], coords[pick(rng)]);
        mask |= Vertex{1} << coords[i];
      }
      hits += labels.root_of(x) == labels.root_of(x ^ mask);
    }
    out[k] = static_cast<double>(hits) / static_cast<double>(per_distance);
  }
  return out;
}

}  // namespace

Estimate Estimate::from_samples(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("estimate of an empty sample");
  double sum = 0.0;
  for (double s : samples) sum += s;
  const double count = static_cast<double>(samples.size());
  const double mean = sum / count;
  double squares = 0.0;
  for (double s : samples) squares += (s - mean) * (s - mean);
  Estimate e;
  e.mean = mean;
  e.replicates = samples.size();
  e.std_error = samples.size() > 1 ? std::sqrt(squares / (count - 1.0) / count) : 0.0;
  return e;
}

double chi_statistic(const ClusterLabeling& labels) {
  return std::ldexp(sum_squared_sizes(labels), -labels.dim().n());
}

double p_geq_k_statistic(const ClusterLabeling& labels, std::uint64_t k) {
  return std::ldexp(static_cast<double>(count_z_geq(labels, k)), -labels.dim().n());
}

Estimate chi_hat(std::span<const ClusterLabeling> labelings, int threads) {
  return reduce(labelings, threads, [](const ClusterLabeling& l) { return chi_statistic(l); });
}

Estimate p_geq_k_hat(std::span<const ClusterLabeling> labelings, std::uint64_t k, int threads) {
  return reduce(labelings, threads, [k](const ClusterLabeling& l) { return p_geq_k_statistic(l, k); });
}

double n_alpha(double p_c, double p, int n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  const double epsilon = n * (p - p_c);
  if (!(epsilon > 0.0)) throw std::invalid_argument("N_alpha needs epsilon = n(p - p_c) > 0");
  return std::pow(epsilon, alpha - 2.0) * std::exp2(n * alpha / 3.0);
}

std::uint64_t n_alpha_cutoff(double n_alpha_value) {
  if (!(n_alpha_value >= 0.0)) throw std::invalid_argument("N_alpha must be non-negative");
  const double c = std::ceil(n_alpha_value);
  return c >= 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(c);
}

Estimate theta_alpha_hat(std::span<const ClusterLabeling> labelings, double n_alpha_value, int threads) {
  if (!(n_alpha_value >= 1.0)) throw std::invalid_argument("theta_alpha needs N_alpha >= 1");
  return p_geq_k_hat(labelings, n_alpha_cutoff(n_alpha_value), threads);
}

RadialProfile RadialProfile::delta0(int n) {
  RadialProfile t = constant(n, 0.0);
  t.values[0] = 1.0;
  return t;
}

RadialProfile RadialProfile::constant(int n, double value) {
  return RadialProfile{n, std::vector<double>(static_cast<std::size_t>(n + 1), value)};
}

HammingScheme::HammingScheme(int n) : n_(n) {
  if (n < 1 || n > kHardMaxDim) throw std::invalid_argument("HammingScheme: n out of range");
  const auto m = static_cast<std::size_t>(n + 1);
  table_.assign(m * m * m, 0);
  for (int k = 0; k <= n; ++k) {
    // w flips a of the k coordinates where x and y differ and b of the rest.
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; b <= n - k; ++b) {
        const auto i = static_cast<std::size_t>(a + b);
        const auto j = static_cast<std::size_t>(k - a + b);
        table_[(static_cast<std::size_t>(k) * m + i) * m + j] += binomial(k, a) * binomial(n - k, b);
      }
    }
  }
}

std::shared_ptr<const HammingScheme> HammingScheme::cached(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const HammingScheme>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const HammingScheme>(n);
  return slot;
}

RadialProfile connected_pair_fraction(const ClusterLabeling& labels, const PairCensusOptions& options,
                                      std::uint64_t replicate_index) {
  const int n = labels.dim().n();
  if (n <= options.exact_max_n) return RadialProfile{n, exact_pair_census(labels)};
  return RadialProfile{n, sampled_pair_fraction(labels, options, replicate_index)};
}

RadialProfile average_profiles(std::span<const RadialProfile> profiles) {
  if (profiles.empty()) throw std::invalid_argument("average of no profiles");
  RadialProfile out = RadialProfile::constant(profiles.front().n, 0.0);
  for (const auto& p : profiles) {
    if (p.n != out.n) throw std::invalid_argument("profiles of different dimension");
    for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += p.values[k];
  }
  for (double& v : out.values) v /= static_cast<double>(profiles.size());
  return out;
}

RadialProfile two_point_radial_hat(std::span<const ClusterLabeling> labelings, const PairCensusOptions& options,
                                   int threads) {
  check_nonempty(labelings);
  std::vector<RadialProfile> per(labelings.size());
  parallel_for(labelings.size(), threads,
               [&](std::size_t i) { per[i] = connected_pair_fraction(labelings[i], options, i); });
  return average_profiles(per);
}

RadialProfile radial_convolution(const RadialProfile& t1, const RadialProfile& t2) {
  if (t1.n != t2.n || t1.values.size() != t2.values.size())
    throw std::invalid_argument("radial_convolution: dimension mismatch");
  const int n = t1.n;
  const auto scheme = HammingScheme::cached(n);
  RadialProfile out = RadialProfile::constant(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      double row = 0.0;
      for (int j = 0; j <= n; ++j) {
        const std::uint64_t count = scheme->intersection(k, i, j);
        if (count) row += static_cast<double>(count) * t2(j);
      }
      acc += t1(i) * row;
    }
    out.values[k] = acc;
  }
  return out;
}

TriangleReport triangle_diagram_hat(const RadialProfile& profile, double chi, double K1, double K2, double p) {
  const RadialProfile nabla = radial_convolution(radial_convolution(profile, profile), profile);
  TriangleReport r;
  r.p = p;
  r.K1 = K1;
  r.K2 = K2;
  r.chi_used = chi;
  r.nabla = nabla.values;
  r.nabla_diag = nabla(0);
  r.nabla_offdiag = 0.0;
  for (int k = 1; k <= profile.n; ++k) r.nabla_offdiag = std::max(r.nabla_offdiag, nabla(k));
  r.a0 = K1 / profile.n + K2 * chi * chi * chi / std::exp2(profile.n);
  return r;
}

ZConcentrationReport z_concentration_check(std::span<const double> z_values, int n, double eta1) {
  if (z_values.empty()) throw std::invalid_argument("z_concentration_check needs replicates");
  const Estimate z = Estimate::from_samples(z_values);
  ZConcentrationReport r;
  r.replicates = z_values.size();
  r.z_mean = z.mean;
  r.theta = std::ldexp(z.mean, -n);
  r.threshold = std::exp2((1.0 - eta1) * n) * r.theta;
  // A zero deviation never counts, so a deterministic Z (θ = 0 or 1) has
  // frequency 0 even though the threshold then degenerates.
  std::size_t exceed = 0;
  for (double v : z_values) {
    const double deviation = std::abs(v - z.mean);
    exceed += deviation > 0.0 && deviation >= r.threshold;
  }
  r.exceed_frequency = static_cast<double>(exceed) / static_cast<double>(z_values.size());
  return r;
}

ZConcentrationReport z_concentration_check(std::span<const ClusterLabeling> labelings, double n_alpha_value,
                                           double eta1) {
  check_nonempty(labelings);
  const std::uint64_t k = n_alpha_cutoff(n_alpha_value);
  std::vector<double> z;
  z.reserve(labelings.size());
  for (const auto& l : labelings) z.push_back(static_cast<double>(count_z_geq(l, k)));
  return z_concentration_check(z, labelings.front().dim().n(), eta1);
}

}  // namespace qperc
