#include "qperc/clusters.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qperc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t count) : parent_(count), size_(count, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::vector<std::uint32_t>& parents() { return parent_; }
  std::vector<std::uint32_t>& sizes() { return size_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

ClusterLabeling label_components(const OccupiedGraph& g) {
  const CubeDim& dim = g.dim();
  if (dim.n() > 31) throw std::invalid_argument("label_components supports n <= 31");
  const std::size_t volume = static_cast<std::size_t>(dim.volume());
  DisjointSets sets(volume);

  for (int d = 0; d < dim.n(); ++d) {
    const auto plane = g.plane(d);
    const Vertex flip = Vertex{1} << d;
    for (std::size_t w = 0; w < plane.size(); ++w) {
      std::uint64_t bits = plane[w];
      while (bits) {
        const std::uint64_t index = (static_cast<std::uint64_t>(w) << 6) | std::countr_zero(bits);
        bits &= bits - 1;
        const Vertex v = expand_plane_index(index, d);
        sets.unite(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v | flip));
      }
    }
  }

  ClusterLabeling labels(dim);
  labels.root_.resize(volume);
  for (std::size_t v = 0; v < volume; ++v) labels.root_[v] = sets.find(static_cast<std::uint32_t>(v));
  labels.size_of_root_ = std::move(sets.sizes());
  for (std::size_t v = 0; v < volume; ++v)
    if (labels.root_[v] == v) labels.sizes_desc_.push_back(labels.size_of_root_[v]);
  std::sort(labels.sizes_desc_.begin(), labels.sizes_desc_.end(), std::greater<>());
  return labels;
}

std::vector<std::vector<Vertex>> ClusterLabeling::components() const {
  std::vector<std::uint32_t> slot(root_.size(), 0);
  std::vector<std::vector<Vertex>> groups;
  groups.reserve(sizes_desc_.size());
  for (std::size_t v = 0; v < root_.size(); ++v) {
    if (root_[v] == v) {
      slot[v] = static_cast<std::uint32_t>(groups.size());
      groups.emplace_back();
      groups.back().reserve(size_of_root_[v]);
    }
  }
  for (std::size_t v = 0; v < root_.size(); ++v) groups[slot[root_[v]]].push_back(v);
  return groups;
}

std::uint64_t count_z_geq(const ClusterLabeling& labels, std::uint64_t k) {
  std::uint64_t total = 0;
  for (std::uint32_t s : labels.sizes_desc()) {
    if (s < k) break;
    total += s;
  }
  return total;
}

std::pair<std::uint32_t, std::uint32_t> top_two(const ClusterLabeling& labels) {
  const auto& sizes = labels.sizes_desc();
  return {sizes[0], sizes.size() > 1 ? sizes[1] : 0u};
}

double sum_squared_sizes(const ClusterLabeling& labels) {
  std::uint64_t total = 0;
  for (std::uint64_t s : labels.sizes_desc()) total += s * s;
  return static_cast<double>(total);
}

}  // namespace qperc
