#pragma once

// Geometry and combinatorics of the n-cube Q_n.
//
// Vertices are the integers 0..2^n-1. Flipping coordinate i is XOR with 2^i
// and the graph distance is the population count of the XOR.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace qperc {

using Vertex = std::uint64_t;

inline constexpr int kDefaultMaxDim = 28;
inline constexpr int kHardMaxDim = 62;

class CubeDim {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= max_dim <= 62.
  explicit CubeDim(int n, int max_dim = kDefaultMaxDim);

  int n() const { return n_; }
  std::uint64_t volume() const { return std::uint64_t{1} << n_; }
  std::uint64_t edge_count() const { return static_cast<std::uint64_t>(n_) << (n_ - 1); }

  bool operator==(const CubeDim& other) const { return n_ == other.n_; }

 private:
  int n_;
};

inline int hamming_distance(Vertex a, Vertex b) { return std::popcount(a ^ b); }

/// Membership bitset over {0,...,V-1} with a cached cardinality.
class VertexSet {
 public:
  explicit VertexSet(const CubeDim& dim);
  static VertexSet from_vertices(const CubeDim& dim, std::span<const Vertex> vertices);
  static VertexSet full(const CubeDim& dim);

  const CubeDim& dim() const { return dim_; }
  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  std::uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  void insert(Vertex v);
  void erase(Vertex v);

  std::vector<Vertex> members() const;
  VertexSet intersect(const VertexSet& other) const;

  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const VertexSet& other) const { return dim_ == other.dim_ && words_ == other.words_; }

 private:
  friend VertexSet hamming_ball(const VertexSet& x, int d);
  void recount();

  CubeDim dim_;
  std::vector<std::uint64_t> words_;
  std::uint64_t count_ = 0;
};

/// A vertex path; consecutive entries are adjacent in Q_n.
using Path = std::vector<Vertex>;
using PathList = std::vector<Path>;

/// Sum_{i <= min(u,n)} C(n,i), exact. Throws std::overflow_error if it cannot
/// be represented (never for n <= 62).
std::uint64_t ball_volume_exact(const CubeDim& dim, int u);

/// Exact binomial coefficient C(n,k) for n <= 62.
std::uint64_t binomial(int n, int k);

/// B[X,d] by layer-by-layer breadth-first dilation of the set.
/// Throws std::invalid_argument for empty X or negative d.
VertexSet hamming_ball(const VertexSet& x, int d);

/// Sum_{i >= (n+delta)/2} C(n,i).
std::uint64_t tail_sum_exact(const CubeDim& dim, double delta);

/// Sum_{i <= (n-delta)/2} C(n,i); equal to tail_sum_exact by Pascal symmetry.
std::uint64_t lower_tail_sum_exact(const CubeDim& dim, double delta);

/// 2^n exp(-delta^2 / 2n).
double large_deviation_bound(const CubeDim& dim, double delta);

/// Smallest integer delta >= 0 with exp(-delta^2 / 2n) < epsilon / 2.
int min_overlap_delta(const CubeDim& dim, double epsilon);

/// Vertex-disjoint paths of length <= delta, each starting at a member of a
/// (2*delta)-separated subset of B[S,delta] ∩ T and ending in S. The subset
/// is chosen greedily in ascending vertex order and each path is a shortest
/// path found by breadth-first search over unused vertices.
PathList disjoint_short_paths(const VertexSet& s, const VertexSet& t, int delta);

/// Checks adjacency, pairwise vertex-disjointness and the length bound.
bool paths_valid(const CubeDim& dim, const PathList& paths, int delta);

}  // namespace qperc
