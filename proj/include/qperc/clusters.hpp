#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qperc/cube.hpp"
#include "qperc/gen.hpp"

namespace qperc {

/// Component partition of an OccupiedGraph. Immutable after construction;
/// representatives are fully compressed.
class ClusterLabeling {
 public:
  const CubeDim& dim() const { return dim_; }

  std::uint32_t root_of(Vertex v) const { return root_[v]; }
  /// |C(v)|.
  std::uint32_t cluster_size_of(Vertex v) const { return size_of_root_[root_[v]]; }
  /// |C_1| >= |C_2| >= ... ; sums to 2^n.
  const std::vector<std::uint32_t>& sizes_desc() const { return sizes_desc_; }
  std::size_t component_count() const { return sizes_desc_.size(); }

  /// Vertices of every component, grouped; order of groups follows the root
  /// index, vertices ascending inside each group.
  std::vector<std::vector<Vertex>> components() const;

 private:
  friend ClusterLabeling label_components(const OccupiedGraph& g);
  explicit ClusterLabeling(const CubeDim& dim) : dim_(dim) {}

  CubeDim dim_;
  std::vector<std::uint32_t> root_;
  std::vector<std::uint32_t> size_of_root_;
  std::vector<std::uint32_t> sizes_desc_;
};

/// Union-find over the occupied edges, plane by plane, with path halving and
/// union by size.
ClusterLabeling label_components(const OccupiedGraph& g);

inline std::uint32_t cluster_size_of(const ClusterLabeling& labels, Vertex v) { return labels.cluster_size_of(v); }

/// Z_{>=k}: number of vertices in components of size >= k.
std::uint64_t count_z_geq(const ClusterLabeling& labels, std::uint64_t k);

/// (|C_max|, |C_2|), with |C_2| = 0 for a single component.
std::pair<std::uint32_t, std::uint32_t> top_two(const ClusterLabeling& labels);

/// Sum_i |C_i|^2.
double sum_squared_sizes(const ClusterLabeling& labels);

}  // namespace qperc
