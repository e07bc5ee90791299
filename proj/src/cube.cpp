#include "qperc/cube.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qperc {

namespace {

// Positions whose bit i (i < 6) is zero, within a 64-bit word.
constexpr std::uint64_t kLowMasks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

std::size_t word_count(const CubeDim& dim) {
  return static_cast<std::size_t>((dim.volume() + 63) / 64);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("binomial sum overflows 64 bits");
  return out;
}

std::uint64_t sum_binomials(int n, int lo, int hi) {
  lo = std::max(lo, 0);
  hi = std::min(hi, n);
  std::uint64_t total = 0;
  for (int i = lo; i <= hi; ++i) total = checked_add(total, binomial(n, i));
  return total;
}

}  // namespace

CubeDim::CubeDim(int n, int max_dim) : n_(n) {
  if (max_dim > kHardMaxDim) throw std::invalid_argument("max_dim exceeds " + std::to_string(kHardMaxDim));
  if (n < 1 || n > max_dim) {
    throw std::invalid_argument("dimension n=" + std::to_string(n) + " outside [1, " + std::to_string(max_dim) + "]");
  }
}

VertexSet::VertexSet(const CubeDim& dim) : dim_(dim), words_(word_count(dim), 0) {}

VertexSet VertexSet::from_vertices(const CubeDim& dim, std::span<const Vertex> vertices) {
  VertexSet out(dim);
  for (Vertex v : vertices) out.insert(v);
  return out;
}

VertexSet VertexSet::full(const CubeDim& dim) {
  VertexSet out(dim);
  const std::uint64_t v = dim.volume();
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = ~0ull;
  if (v % 64 != 0) out.words_.back() = (std::uint64_t{1} << (v % 64)) - 1;
  out.count_ = v;
  return out;
}

void VertexSet::insert(Vertex v) {
  if (v >= dim_.volume()) throw std::out_of_range("vertex outside cube");
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v >= dim_.volume()) throw std::out_of_range("vertex outside cube");
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back((static_cast<Vertex>(w) << 6) | static_cast<Vertex>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  if (!(dim_ == other.dim_)) throw std::invalid_argument("vertex sets of different dimension");
  VertexSet out(dim_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
  out.recount();
  return out;
}

void VertexSet::recount() {
  count_ = 0;
  for (std::uint64_t w : words_) count_ += static_cast<std::uint64_t>(std::popcount(w));
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kHardMaxDim) throw std::invalid_argument("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Each partial product C(n-k+i, i) is an integer; the 128-bit intermediate
  // keeps the multiply exact before the division.
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t ball_volume_exact(const CubeDim& dim, int u) {
  if (u < 0) throw std::invalid_argument("ball radius must be non-negative");
  return sum_binomials(dim.n(), 0, u);
}

VertexSet hamming_ball(const VertexSet& x, int d) {
  if (x.empty()) throw std::invalid_argument("hamming_ball of an empty set");
  if (d < 0) throw std::invalid_argument("hamming_ball radius must be non-negative");
  const int n = x.dim().n();
  VertexSet ball = x;
  std::vector<std::uint64_t> frontier(ball.words_.begin(), ball.words_.end());
  std::vector<std::uint64_t> next(frontier.size());
  for (int step = 0; step < std::min(d, n); ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (i < 6) {
        const std::uint64_t mask = kLowMasks[i];
        const int shift = 1 << i;
        for (std::size_t w = 0; w < frontier.size(); ++w) {
          const std::uint64_t f = frontier[w];
          next[w] |= ((f & mask) << shift) | ((f >> shift) & mask);
        }
      } else {
        const std::size_t stride = std::size_t{1} << (i - 6);
        for (std::size_t w = 0; w < frontier.size(); ++w) next[w] |= frontier[w ^ stride];
      }
    }
    bool grew = false;
    for (std::size_t w = 0; w < frontier.size(); ++w) {
      const std::uint64_t fresh = next[w] & ~ball.words_[w];
      ball.words_[w] |= fresh;
      frontier[w] = fresh;
      grew = grew || fresh != 0;
    }
    if (!grew) break;
  }
  ball.recount();
  return ball;
}

std::uint64_t tail_sum_exact(const CubeDim& dim, double delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  const double start = std::ceil((dim.n() + delta) / 2.0);
  if (start > dim.n()) return 0;
  return sum_binomials(dim.n(), static_cast<int>(start), dim.n());
}

std::uint64_t lower_tail_sum_exact(const CubeDim& dim, double delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  const double stop = std::floor((dim.n() - delta) / 2.0);
  if (stop < 0) return 0;
  return sum_binomials(dim.n(), 0, static_cast<int>(stop));
}

double large_deviation_bound(const CubeDim& dim, double delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  const double n = dim.n();
  return std::ldexp(std::exp(-delta * delta / (2.0 * n)), dim.n());
}

int min_overlap_delta(const CubeDim& dim, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
  const double n = dim.n();
  const double half = epsilon / 2.0;
  auto holds = [&](int delta) { return std::exp(-static_cast<double>(delta) * delta / (2.0 * n)) < half; };
  int delta = static_cast<int>(std::floor(std::sqrt(2.0 * n * std::log(2.0 / epsilon))));
  while (delta > 0 && holds(delta - 1)) --delta;
  while (!holds(delta)) ++delta;
  return delta;
}

PathList disjoint_short_paths(const VertexSet& s, const VertexSet& t, int delta) {
  if (s.empty() || t.empty()) throw std::invalid_argument("disjoint_short_paths needs nonempty S and T");
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  const CubeDim& dim = s.dim();
  const int n = dim.n();

  const VertexSet t1 = hamming_ball(s, delta).intersect(t);
  std::vector<Vertex> kept;
  for (Vertex v : t1.members()) {
    bool separated = std::all_of(kept.begin(), kept.end(),
                                 [&](Vertex k) { return hamming_distance(v, k) >= 2 * delta + 1; });
    if (separated) kept.push_back(v);
  }

  PathList paths;
  VertexSet used(dim);
  for (Vertex start : kept) {
    if (used.contains(start)) continue;
    // Neighbours are expanded in ascending coordinate order, so the first
    // vertex of S reached comes through the smallest predecessors.
    std::unordered_map<Vertex, Vertex> parent{{start, start}};
    std::deque<std::pair<Vertex, int>> queue{{start, 0}};
    std::optional<Vertex> hit;
    if (s.contains(start)) hit = start;
    while (!queue.empty() && !hit) {
      const auto [v, depth] = queue.front();
      queue.pop_front();
      if (depth >= delta) continue;
      for (int i = 0; i < n; ++i) {
        const Vertex w = v ^ (Vertex{1} << i);
        if (used.contains(w) || parent.contains(w)) continue;
        parent.emplace(w, v);
        if (s.contains(w)) {
          hit = w;
          break;
        }
        queue.emplace_back(w, depth + 1);
      }
    }
    if (!hit) continue;
    Path path{*hit};
    while (path.back() != start) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    for (Vertex v : path) used.insert(v);
    paths.push_back(std::move(path));
  }
  return paths;
}

bool paths_valid(const CubeDim& dim, const PathList& paths, int delta) {
  VertexSet seen(dim);
  for (const Path& path : paths) {
    if (path.empty() || static_cast<int>(path.size()) - 1 > delta) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] >= dim.volume() || seen.contains(path[i])) return false;
      seen.insert(path[i]);
      if (i > 0 && hamming_distance(path[i - 1], path[i]) != 1) return false;
    }
  }
  return true;
}

}  // namespace qperc
