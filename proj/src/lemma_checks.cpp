#include "qperc/lemma_checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qperc/cube.hpp"

namespace qperc {

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

VertexSet random_subset(const CubeDim& dim, std::uint64_t size, Rng& rng) {
  std::vector<Vertex> all(dim.volume());
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::uint64_t i = 0; i < size; ++i) std::swap(all[i], all[uniform_int(rng, i, all.size() - 1)]);
  return VertexSet::from_vertices(dim, std::span<const Vertex>(all.data(), size));
}

VertexSet ball_around(const CubeDim& dim, Vertex center, int radius) {
  VertexSet c(dim);
  c.insert(center);
  return hamming_ball(c, radius);
}

// Smallest ball around `center` with at least `size` vertices, topped up
// with random vertices until it has exactly max(size, ball) members.
VertexSet ball_like(const CubeDim& dim, Vertex center, std::uint64_t size, Rng& rng) {
  int radius = 0;
  while (ball_volume_exact(dim, radius) < size) ++radius;
  VertexSet inner = ball_around(dim, center, std::max(radius - 1, 0));
  if (radius == 0) return inner;
  while (inner.size() < size) inner.insert(uniform_int(rng, 0, dim.volume() - 1));
  return inner;
}

// A random set with |X| >= ball_volume(u); returns the u it certifies.
std::pair<VertexSet, int> harper_instance(const CubeDim& dim, Rng& rng) {
  const int n = dim.n();
  const auto volume = dim.volume();
  switch (uniform_int(rng, 0, 2)) {
    case 0: {
      const int u = static_cast<int>(uniform_int(rng, 0, n));
      const auto base = ball_volume_exact(dim, u);
      return {random_subset(dim, uniform_int(rng, base, std::min(volume, 2 * base)), rng), u};
    }
    case 1: {
      const int u = static_cast<int>(uniform_int(rng, 0, n - 1));
      VertexSet x = ball_around(dim, uniform_int(rng, 0, volume - 1), u);
      const auto extra = uniform_int(rng, 0, binomial(n, u + 1));
      for (std::uint64_t i = 0; i < extra; ++i) x.insert(uniform_int(rng, 0, volume - 1));
      return {std::move(x), u};
    }
    default: {
      // Subcube on the low m coordinates, translated by a random pattern.
      const int m = static_cast<int>(uniform_int(rng, 0, n));
      const Vertex pattern = uniform_int(rng, 0, volume - 1) & ~((Vertex{1} << m) - 1);
      VertexSet x(dim);
      for (Vertex low = 0; low < (Vertex{1} << m); ++low) x.insert(pattern | low);
      int u = 0;
      while (u < n && ball_volume_exact(dim, u + 1) <= x.size()) ++u;
      return {std::move(x), u};
    }
  }
}

// S and T with |S|,|T| >= ε 2^n: random sets, balls, or antipodal balls,
// the last being the tight configuration for the overlap bound.
std::pair<VertexSet, VertexSet> overlap_instance(const CubeDim& dim, double epsilon, Rng& rng) {
  const auto volume = dim.volume();
  const auto need = static_cast<std::uint64_t>(std::ceil(epsilon * static_cast<double>(volume)));
  auto pick_size = [&] { return uniform_int(rng, need, std::min(volume, need + need / 2 + 1)); };
  switch (uniform_int(rng, 0, 2)) {
    case 0:
      return {random_subset(dim, pick_size(), rng), random_subset(dim, pick_size(), rng)};
    case 1: {
      const Vertex a = uniform_int(rng, 0, volume - 1);
      return {ball_like(dim, a, pick_size(), rng), random_subset(dim, pick_size(), rng)};
    }
    default: {
      const Vertex a = uniform_int(rng, 0, volume - 1);
      return {ball_like(dim, a, pick_size(), rng), ball_like(dim, a ^ (volume - 1), pick_size(), rng)};
    }
  }
}

double random_epsilon(Rng& rng) { return std::uniform_real_distribution<double>(0.01, 1.0)(rng); }

}  // namespace

LemmaCheckResult check_harper(int n, std::uint64_t instances, std::uint64_t seed) {
  const CubeDim dim(n);
  Rng rng(seed ^ (0x4841525045520000ull + static_cast<std::uint64_t>(n)));
  LemmaCheckResult r{"harper", n, instances, 0};
  for (std::uint64_t i = 0; i < instances; ++i) {
    auto [x, u] = harper_instance(dim, rng);
    const int d = static_cast<int>(uniform_int(rng, 0, n));
    if (hamming_ball(x, d).size() < ball_volume_exact(dim, u + d)) ++r.violations;
  }
  return r;
}

LemmaCheckResult check_tail_bound(int n) {
  const CubeDim dim(n, kHardMaxDim);
  LemmaCheckResult r{"tail_bound", n, 0, 0};
  for (int delta = 0; delta <= n; ++delta) {
    ++r.instances;
    const auto upper = tail_sum_exact(dim, delta);
    const auto lower = lower_tail_sum_exact(dim, delta);
    const bool ok = upper == lower && static_cast<long double>(upper) <= large_deviation_bound(dim, delta);
    if (!ok) ++r.violations;
  }
  return r;
}

LemmaCheckResult check_big_overlap(int n, std::uint64_t instances, std::uint64_t seed) {
  const CubeDim dim(n);
  Rng rng(seed ^ (0x4F5645524C415000ull + static_cast<std::uint64_t>(n)));
  LemmaCheckResult r{"big_overlap", n, instances, 0};
  for (std::uint64_t i = 0; i < instances; ++i) {
    const double epsilon = random_epsilon(rng);
    auto [s, t] = overlap_instance(dim, epsilon, rng);
    const int delta = min_overlap_delta(dim, epsilon);
    if (2 * hamming_ball(s, delta).intersect(t).size() < t.size()) ++r.violations;
  }
  return r;
}

LemmaCheckResult check_many_paths(int n, std::uint64_t instances, std::uint64_t seed) {
  const CubeDim dim(n);
  Rng rng(seed ^ (0x5041544853000000ull + static_cast<std::uint64_t>(n)));
  LemmaCheckResult r{"many_paths", n, instances, 0};
  for (std::uint64_t i = 0; i < instances; ++i) {
    const double epsilon = random_epsilon(rng);
    auto [s, t] = overlap_instance(dim, epsilon, rng);
    const int delta = min_overlap_delta(dim, epsilon);
    const PathList paths = disjoint_short_paths(s, t, delta);
    const double guarantee = 0.5 * epsilon * static_cast<double>(dim.volume()) * std::pow(n, -2.0 * delta);
    bool ok = paths_valid(dim, paths, delta) && static_cast<double>(paths.size()) >= guarantee;
    for (const Path& path : paths) ok = ok && t.contains(path.front()) && s.contains(path.back());
    if (!ok) ++r.violations;
  }
  return r;
}

std::vector<LemmaCheckResult> run_lemma_suite(int max_n, std::uint64_t instances, std::uint64_t seed) {
  std::vector<LemmaCheckResult> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(check_harper(n, instances, seed));
    out.push_back(check_big_overlap(n, instances, seed));
    out.push_back(check_many_paths(n, std::max<std::uint64_t>(1, instances / 10), seed));
  }
  for (int n = 1; n <= std::max(max_n, 30); ++n) out.push_back(check_tail_bound(n));
  return out;
}

}  // namespace qperc
