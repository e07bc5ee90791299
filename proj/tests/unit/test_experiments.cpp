#include <doctest.h>

#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qperc/experiments.hpp"

using namespace qperc;

namespace {

struct Brute {
  double chi = 0, cmax = 0;
  std::vector<double> pmf;
};

// Exhaustive over configurations, labels by breadth-first search.
Brute brute_force(int n, double p) {
  const CubeDim d(n);
  const std::uint64_t edges = d.edge_count();
  Brute out;
  out.pmf.assign(d.volume() + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
    const int k = std::popcount(mask);
    const double w = std::pow(p, k) * std::pow(1 - p, double(edges - k));
    OccupiedGraph g(d);
    for (std::uint64_t e = 0; e < edges; ++e) {
      const int dir = static_cast<int>(e / (d.volume() / 2));
      g.set(EdgeId{expand_plane_index(e % (d.volume() / 2), dir), dir}, (mask >> e) & 1);
    }
    std::vector<int> comp(d.volume(), -1);
    std::vector<double> sizes;
    for (Vertex s = 0; s < d.volume(); ++s) {
      if (comp[s] >= 0) continue;
      const int id = static_cast<int>(sizes.size());
      sizes.push_back(0);
      std::deque<Vertex> q{s};
      comp[s] = id;
      while (!q.empty()) {
        const Vertex v = q.front();
        q.pop_front();
        ++sizes[id];
        for (int i = 0; i < n; ++i) {
          const Vertex u = v ^ (Vertex{1} << i);
          if (g.occupied(v, i) && comp[u] < 0) {
            comp[u] = id;
            q.push_back(u);
          }
        }
      }
    }
    double sq = 0, mx = 0;
    for (double s : sizes) {
      sq += s * s;
      mx = std::max(mx, s);
    }
    out.chi += w * sq / double(d.volume());
    out.cmax += w * mx;
    out.pmf[static_cast<std::size_t>(sizes[comp[0]])] += w;
  }
  return out;
}

}  // namespace

TEST_CASE("exact enumeration on Q_1 and Q_2") {
  const auto one = exact_enumerate(1, 0.3);
  CHECK(one.chi_exact == doctest::Approx(1.3));
  CHECK(one.e_cmax_exact == doctest::Approx(1.3));
  const auto two = exact_enumerate(2, 0.5);
  CHECK(two.chi_exact == doctest::Approx(2.5625).epsilon(1e-15));
  for (double p : {0.0, 0.1, 0.7, 1.0}) {
    const double poly = 1 + 2 * p + 2 * p * p + 2 * p * p * p - 3 * p * p * p * p;
    CHECK(exact_enumerate(2, p).chi_exact == doctest::Approx(poly).epsilon(1e-14));
  }
  CHECK(exact_enumerate(3, 0.0).chi_exact == doctest::Approx(1.0));
  CHECK(exact_enumerate(3, 1.0).chi_exact == doctest::Approx(8.0));
}

TEST_CASE("exact enumeration matches an independent brute force") {
  for (int n = 1; n <= 3; ++n)
    for (double p : {0.1, 0.45, 0.8}) {
      const auto e = exact_enumerate(n, p);
      const auto b = brute_force(n, p);
      CHECK(e.chi_exact == doctest::Approx(b.chi).epsilon(1e-12));
      CHECK(e.e_cmax_exact == doctest::Approx(b.cmax).epsilon(1e-12));
      REQUIRE(e.cluster_size_pmf.size() == b.pmf.size());
      double total = 0, mean = 0;
      for (std::size_t k = 0; k < b.pmf.size(); ++k) {
        CHECK(e.cluster_size_pmf[k] == doctest::Approx(b.pmf[k]).epsilon(1e-12));
        total += e.cluster_size_pmf[k];
        mean += k * e.cluster_size_pmf[k];
      }
      CHECK(total == doctest::Approx(1.0));
      CHECK(mean == doctest::Approx(e.chi_exact));
      CHECK(e.p_geq(1) == doctest::Approx(1.0));
      CHECK(e.p_geq(2) == doctest::Approx(1.0 - e.cluster_size_pmf[1]));
    }
  CHECK_THROWS_AS(exact_enumerate(4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(exact_enumerate(2, 1.5), std::invalid_argument);
}

TEST_CASE("sweep rows are coupled and deterministic") {
  SweepConfig cfg;
  cfg.n = 10;
  cfg.epsilon_grid = {-2.0, 0.0, 0.5, 2.0};
  cfg.replicates = 20;
  cfg.observables.triangle = true;
  PcResult pc;
  pc.n = 10;
  pc.p_hat = 0.3;
  const auto a = run_sweep(cfg, pc);
  cfg.threads = 3;
  const auto b = run_sweep(cfg, pc);
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].cmax_samples == b[i].cmax_samples);
    CHECK(a[i].chi_samples == b[i].chi_samples);
    CHECK(a[i].p == doctest::Approx(0.3 + cfg.epsilon_grid[i] / 10));
    REQUIRE(a[i].triangle.has_value());
  }
  for (std::size_t r = 0; r < 20; ++r)
    for (std::size_t i = 1; i < a.size(); ++i) {
      CHECK(a[i - 1].cmax_samples[r] <= a[i].cmax_samples[r]);
      CHECK(a[i - 1].chi_samples[r] <= a[i].chi_samples[r]);
    }
  CHECK(std::isnan(a[0].theta.mean));
  CHECK_FALSE(std::isnan(a[2].theta.mean));
  CHECK(a[2].z_concentration.has_value());
  CHECK(a[0].regime == Regime::below);
  CHECK(a[1].regime == Regime::inside);
  CHECK(a[3].regime == Regime::above);
}

TEST_CASE("sweep skips densities outside [0, 1]") {
  SweepConfig cfg;
  cfg.n = 6;
  cfg.epsilon_grid = {-3.0, 0.0};
  cfg.replicates = 4;
  PcResult pc;
  pc.n = 6;
  pc.p_hat = 0.2;
  const auto rows = run_sweep(cfg, pc);
  CHECK(rows[0].skipped);
  CHECK(rows[0].cmax_samples.empty());
  CHECK_FALSE(rows[1].skipped);
  cfg.replicates = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.replicates = 4;
  cfg.alpha = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("sprinkling bookkeeping") {
  const auto r = sprinkling_experiment(12, 0.5, 0.5, {3, 0}, 0.09);
  CHECK(r.p == doctest::Approx(0.09 + 0.5 / 12));
  CHECK(r.q == doctest::Approx(0.5 / 24));
  CHECK(r.p_minus + r.q - r.p_minus * r.q == doctest::Approx(r.p));
  CHECK(r.big_threshold == 4);
  CHECK(r.cmax_after >= r.cmax_before);
  CHECK(r.d_in_largest <= r.M);
  CHECK(r.d_in_largest <= r.cmax_after);
  const auto again = sprinkling_experiment(12, 0.5, 0.5, {3, 0}, 0.09);
  CHECK(again.cmax_after == r.cmax_after);
  SprinkleOptions off;
  off.sprinkle_layer = false;
  const auto plain = sprinkling_experiment(12, 0.5, 0.5, {3, 0}, 0.09, off);
  CHECK(plain.cmax_after == plain.cmax_before);
  CHECK(plain.cmax_before == top_two(label_components(sample_subgraph(CubeDim(12), r.p_minus, {3, 0}))).first);
  CHECK_THROWS_AS(sprinkling_experiment(12, 0.0, 0.5, {3, 0}, 0.09), std::invalid_argument);
  CHECK_THROWS_AS(sprinkling_experiment(12, 0.5, 1.5, {3, 0}, 0.09), std::invalid_argument);
  CHECK_THROWS_AS(sprinkling_experiment(12, 0.5, 0.5, {3, 0}, 0.99), std::invalid_argument);
}

TEST_CASE("duality") {
  const auto d = duality_experiment(10, 0.5, 12, 4, 0.1);
  CHECK(d.c2_above.size() == 12);
  CHECK(d.p_above == doctest::Approx(0.15));
  CHECK(d.p_below == doctest::Approx(0.05));
  CHECK(d.ratio == doctest::Approx(d.c2_above_mean / d.cmax_below_mean));
  CHECK(duality_experiment(10, 5.0, 2, 4, 0.1).p_below == 0.0);
}

TEST_CASE("regime summary and csv output") {
  SweepConfig cfg;
  cfg.n = 10;
  cfg.epsilon_grid = {-0.5, 0.0, 0.5};
  cfg.replicates = 8;
  cfg.window_lambda0 = 1.0;
  PcResult pc;
  pc.n = 10;
  pc.p_hat = 0.11;
  const auto rows = run_sweep(cfg, pc);
  const auto lines = regime_summary(rows);
  bool below = false, inside = false, above = false;
  for (const auto& l : lines) {
    below |= l.quantity == "cmax_over_2logV_eps2";
    inside |= l.quantity == "cmax_over_V23";
    above |= l.quantity == "chi_over_4eps2V";
  }
  CHECK(below);
  CHECK(inside);
  CHECK(above);
  std::ostringstream out;
  write_sweep_csv(out, rows);
  const std::string s = out.str();
  CHECK(s.rfind("epsilon,Lambda,p,regime", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);
  std::ostringstream again;
  write_sweep_csv(again, run_sweep(cfg, pc));
  CHECK(again.str() == s);
}
