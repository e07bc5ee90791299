#pragma once

// Bond configurations on Q_n.
//
// An undirected edge {v, v ^ 2^d} is identified canonically by the endpoint
// whose bit d is zero. Occupancy is stored as n bit planes, one per
// direction, each holding 2^(n-1) bits indexed by the canonical endpoint with
// bit d squeezed out.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qperc/cube.hpp"

namespace qperc {

struct EdgeId {
  Vertex vertex = 0;
  int direction = 0;

  /// Throws std::invalid_argument unless bit `direction` of `vertex` is zero.
  static EdgeId canonical(const CubeDim& dim, Vertex vertex, int direction);
  Vertex other_end() const { return vertex ^ (Vertex{1} << direction); }
  /// Index within the direction plane.
  std::uint64_t plane_index() const;
  /// Global id in [0, n 2^(n-1)): direction-major.
  std::uint64_t ordinal(const CubeDim& dim) const;
};

/// Inverse of EdgeId::plane_index.
inline Vertex expand_plane_index(std::uint64_t index, int direction) {
  const std::uint64_t low = index & ((std::uint64_t{1} << direction) - 1);
  return ((index >> direction) << (direction + 1)) | low;
}

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t replicate_index = 0;
};

/// Counter-based uniforms: SplitMix64 output indexed by the edge ordinal,
/// keyed by (master_seed, replicate_index). Pure function of its inputs.
class EdgeUniforms {
 public:
  explicit EdgeUniforms(const SeedSpec& seed);

  /// Raw 53-bit draw; the uniform is draw * 2^-53.
  std::uint64_t draw(std::uint64_t ordinal) const;
  double uniform(std::uint64_t ordinal) const { return static_cast<double>(draw(ordinal)) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

/// Derives an independent master seed for a named stream (e.g. the sprinkle
/// layer) from a base seed.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream);

class OccupiedGraph {
 public:
  /// All edges vacant.
  OccupiedGraph(const CubeDim& dim, double p = 0.0);
  static OccupiedGraph full(const CubeDim& dim);

  const CubeDim& dim() const { return dim_; }
  /// Advisory density the graph was sampled at.
  double p() const { return p_; }

  bool occupied(const EdgeId& e) const;
  bool occupied(Vertex v, int direction) const;
  std::uint64_t occupied_count() const;

  std::span<const std::uint64_t> plane(int direction) const;
  std::size_t words_per_plane() const { return words_per_plane_; }

  bool same_occupancy(const OccupiedGraph& other) const { return dim_ == other.dim_ && bits_ == other.bits_; }
  /// True if every edge occupied here is occupied in `other`.
  bool subset_of(const OccupiedGraph& other) const;

  /// Builder access used by the samplers and by tests constructing graphs
  /// by hand. Graphs handed to other modules are treated as immutable.
  void set(const EdgeId& e, bool value);

 private:
  friend OccupiedGraph sample_subgraph(const CubeDim&, double, const SeedSpec&);
  friend std::vector<OccupiedGraph> coupled_sample(const CubeDim&, std::span<const double>, const SeedSpec&);
  friend OccupiedGraph union_graphs(const OccupiedGraph&, const OccupiedGraph&);
  friend OccupiedGraph read_occupancy(std::istream&, SeedSpec*);

  std::uint64_t* plane_data(int direction) { return bits_.data() + words_per_plane_ * direction; }

  CubeDim dim_;
  double p_;
  std::size_t words_per_plane_;
  std::vector<std::uint64_t> bits_;
};

/// Each canonical edge is occupied iff its uniform is < p.
/// Throws std::invalid_argument for p outside [0,1].
OccupiedGraph sample_subgraph(const CubeDim& dim, double p, const SeedSpec& seed);

/// Graphs at each p in an ascending list, sharing one uniform per edge, hence
/// nested. Throws std::invalid_argument for non-ascending or out-of-range p.
std::vector<OccupiedGraph> coupled_sample(const CubeDim& dim, std::span<const double> p_list, const SeedSpec& seed);

/// Base-layer density p⁻ solving p⁻ + q - q p⁻ = p with q = ε/(2n).
/// Throws std::invalid_argument if ε < 0, q >= 1, or p < q.
double sprinkle_split(int n, double p, double epsilon);

/// Sprinkle-layer density ε/(2n).
inline double sprinkle_density(int n, double epsilon) { return epsilon / (2.0 * n); }

/// Edgewise OR; metadata p = a.p + b.p - a.p b.p.
OccupiedGraph union_graphs(const OccupiedGraph& a, const OccupiedGraph& b);

// Binary dump: magic "QPRCOCC1", u32 version, u32 n, f64 p, u64 master_seed,
// u64 replicate_index, then the n planes in direction order as little-endian
// 64-bit words.
inline constexpr std::uint32_t kOccupancyFormatVersion = 1;
void write_occupancy(std::ostream& out, const OccupiedGraph& g, const SeedSpec& seed);
OccupiedGraph read_occupancy(std::istream& in, SeedSpec* seed_out = nullptr);

}  // namespace qperc
