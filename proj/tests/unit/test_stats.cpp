#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "qperc/stats.hpp"

using namespace qperc;

namespace {

std::vector<ClusterLabeling> labelings(int n, double p, std::uint64_t seed, int count) {
  std::vector<ClusterLabeling> out;
  for (int r = 0; r < count; ++r) out.push_back(label_components(sample_subgraph(CubeDim(n), p, {seed, std::uint64_t(r)})));
  return out;
}

RadialProfile brute_pair_fraction(const ClusterLabeling& l) {
  const int n = l.dim().n();
  const Vertex v = l.dim().volume();
  RadialProfile out{n, std::vector<double>(n + 1, 0.0)};
  std::vector<double> total(n + 1, 0.0);
  for (Vertex x = 0; x < v; ++x)
    for (Vertex y = 0; y < v; ++y) {
      const int k = hamming_distance(x, y);
      total[k] += 1;
      out.values[k] += l.root_of(x) == l.root_of(y);
    }
  for (int k = 0; k <= n; ++k) out.values[k] /= total[k];
  return out;
}

// (t1 * t2)(k) = Σ_w t1(ρ(0,w)) t2(ρ(w,y)) with y = 2^k - 1.
RadialProfile brute_convolution(const RadialProfile& a, const RadialProfile& b) {
  const int n = a.n;
  RadialProfile out{n, std::vector<double>(n + 1, 0.0)};
  for (int k = 0; k <= n; ++k) {
    const Vertex y = (Vertex{1} << k) - 1;
    for (Vertex w = 0; w < (Vertex{1} << n); ++w) out.values[k] += a(std::popcount(w)) * b(hamming_distance(w, y));
  }
  return out;
}

RadialProfile random_profile(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RadialProfile p{n, std::vector<double>(n + 1)};
  for (auto& x : p.values) x = u(rng);
  return p;
}

}  // namespace

TEST_CASE("Estimate from samples") {
  const std::vector<double> x{1, 2, 3, 4};
  const auto e = Estimate::from_samples(x);
  CHECK(e.mean == 2.5);
  CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(e.replicates == 4);
  const std::vector<double> one{7};
  CHECK(Estimate::from_samples(one).std_error == 0.0);
  CHECK_THROWS_AS(Estimate::from_samples(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("chi at the boundary densities is exact") {
  for (int n : {2, 8, 12}) {
    const auto lo = labelings(n, 0.0, 1, 5);
    const auto hi = labelings(n, 1.0, 1, 5);
    CHECK(chi_hat(lo).mean == 1.0);
    CHECK(chi_hat(lo).std_error == 0.0);
    CHECK(chi_hat(hi).mean == std::exp2(n));
    CHECK(chi_hat(hi).std_error == 0.0);
  }
}

TEST_CASE("chi_hat on Q_2 estimates 1 + 2p + 2p^2 + 2p^3 - 3p^4") {
  for (double p : {0.2, 0.5, 0.8}) {
    const auto ls = labelings(2, p, 5, 4000);
    const auto e = chi_hat(ls, 2);
    const double exact = 1 + 2 * p + 2 * p * p + 2 * p * p * p - 3 * p * p * p * p;
    CHECK(std::abs(e.mean - exact) < 4 * e.std_error);
  }
}

TEST_CASE("estimators do not depend on the thread count") {
  const auto ls = labelings(9, 0.12, 3, 40);
  const auto a = chi_hat(ls, 1), b = chi_hat(ls, 4);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(p_geq_k_hat(ls, 3, 1).mean == p_geq_k_hat(ls, 3, 3).mean);
}

TEST_CASE("P(|C(0)| >= k) statistic is the vertex fraction") {
  const auto l = label_components(sample_subgraph(CubeDim(10), 0.15, {2, 0}));
  for (std::uint64_t k : {1, 2, 5, 50}) CHECK(p_geq_k_statistic(l, k) == double(count_z_geq(l, k)) / 1024.0);
}

TEST_CASE("n_alpha and theta_alpha") {
  const double v = n_alpha(0.1, 0.1 + 0.2 / 12, 12, 0.5);
  CHECK(v == doctest::Approx(std::pow(0.2, -1.5) * std::exp2(12 * 0.5 / 3)));
  CHECK_THROWS_AS(n_alpha(0.1, 0.1, 12, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(n_alpha(0.1, 0.2, 12, 1.0), std::invalid_argument);
  CHECK(n_alpha_cutoff(3.2) == 4);
  CHECK(n_alpha_cutoff(3.0) == 3);
  const auto ls = labelings(10, 0.2, 8, 10);
  CHECK(theta_alpha_hat(ls, 3.2).mean == p_geq_k_hat(ls, 4).mean);
  CHECK_THROWS_AS(theta_alpha_hat(ls, 0.5), std::invalid_argument);
}

TEST_CASE("Hamming scheme intersection numbers match brute force") {
  for (int n = 1; n <= 8; ++n) {
    const auto& h = HammingScheme::cached(n);
    for (int k = 0; k <= n; ++k) {
      const Vertex y = (Vertex{1} << k) - 1;
      std::vector<std::vector<std::uint64_t>> count(n + 1, std::vector<std::uint64_t>(n + 1, 0));
      for (Vertex w = 0; w < (Vertex{1} << n); ++w) ++count[std::popcount(w)][hamming_distance(w, y)];
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) REQUIRE(h->intersection(k, i, j) == count[i][j]);
    }
  }
}

TEST_CASE("radial convolution matches the vertex sum") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 20; ++t) {
      const auto a = random_profile(n, rng), b = random_profile(n, rng);
      const auto fast = radial_convolution(a, b), slow = brute_convolution(a, b);
      for (int k = 0; k <= n; ++k) REQUIRE(fast(k) == doctest::Approx(slow(k)).epsilon(1e-12));
    }
  const auto d = RadialProfile::delta0(5);
  const auto c = RadialProfile::constant(5, 1.0);
  CHECK(radial_convolution(d, c).values == c.values);
  CHECK(radial_convolution(c, c)(3) == 32.0);
  CHECK_THROWS_AS(radial_convolution(d, RadialProfile::delta0(4)), std::invalid_argument);
}

TEST_CASE("connected pair fraction matches the all-pairs count") {
  for (int n = 1; n <= 9; ++n)
    for (double p : {0.0, 0.1, 0.25, 0.6, 1.0}) {
      const auto l = label_components(sample_subgraph(CubeDim(n), p, {4, 0}));
      const auto fast = connected_pair_fraction(l);
      const auto slow = brute_pair_fraction(l);
      for (int k = 0; k <= n; ++k) REQUIRE(fast(k) == doctest::Approx(slow(k)).epsilon(1e-12));
    }
}

TEST_CASE("sampled pair census is unbiased") {
  const auto l = label_components(sample_subgraph(CubeDim(10), 0.2, {4, 1}));
  const auto exact = connected_pair_fraction(l);
  PairCensusOptions opt;
  opt.exact_max_n = 4;
  opt.sampled_pairs = 400000;
  opt.seed = 9;
  const auto sampled = connected_pair_fraction(l, opt);
  CHECK(sampled(0) == 1.0);
  for (int k = 1; k <= 4; ++k) CHECK(sampled(k) == doctest::Approx(exact(k)).epsilon(0.1));
}

TEST_CASE("triangle diagram") {
  const auto rep = triangle_diagram_hat(RadialProfile::delta0(6), 1.0, 2.0, 3.0);
  CHECK(rep.nabla_diag == 1.0);
  CHECK(rep.nabla_offdiag == 0.0);
  CHECK(rep.a0 == doctest::Approx(2.0 / 6 + 3.0 / 64));
  CHECK(rep.offdiag_within_a0());
  const auto full = triangle_diagram_hat(RadialProfile::constant(4, 1.0), 1.0);
  for (double x : full.nabla) CHECK(x == 16.0 * 16.0);
  CHECK_FALSE(full.offdiag_within_a0());
}

TEST_CASE("Z concentration") {
  const std::vector<double> flat{5, 5, 5, 5};
  CHECK(z_concentration_check(flat, 8, 0.1).exceed_frequency == 0.0);
  const auto ls = labelings(8, 0.0, 1, 10);
  CHECK(z_concentration_check(ls, 1.0, 0.1).exceed_frequency == 0.0);
  const std::vector<double> spread{0, 1000, 0, 1000};
  const auto r = z_concentration_check(spread, 4, 0.5);
  CHECK(r.z_mean == 500.0);
  CHECK(r.exceed_frequency == 1.0);
}
