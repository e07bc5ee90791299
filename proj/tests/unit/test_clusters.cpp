#include <doctest.h>

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <vector>

#include "qperc/clusters.hpp"

using namespace qperc;

namespace {

// Reference labeler: breadth-first search from every unvisited vertex.
std::vector<int> bfs_labels(const OccupiedGraph& g) {
  const CubeDim& d = g.dim();
  std::vector<int> label(d.volume(), -1);
  int next = 0;
  for (Vertex s = 0; s < d.volume(); ++s) {
    if (label[s] >= 0) continue;
    std::deque<Vertex> q{s};
    label[s] = next;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop_front();
      for (int i = 0; i < d.n(); ++i) {
        const Vertex w = v ^ (Vertex{1} << i);
        if (g.occupied(v, i) && label[w] < 0) {
          label[w] = next;
          q.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::uint32_t> sizes_from(const std::vector<int>& label) {
  const int k = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::uint32_t> sizes(k, 0);
  for (int l : label) ++sizes[l];
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace

TEST_CASE("union-find labeling matches breadth-first search") {
  for (int n = 1; n <= 11; ++n)
    for (double p : {0.0, 0.05, 1.0 / n, 0.3, 0.7, 1.0})
      for (std::uint64_t r = 0; r < 3; ++r) {
        const auto g = sample_subgraph(CubeDim(n), p, {17, r});
        const auto labels = label_components(g);
        const auto ref = bfs_labels(g);
        REQUIRE(labels.sizes_desc() == sizes_from(ref));
        for (Vertex u = 0; u < g.dim().volume(); ++u) {
          const Vertex w = (u * 2654435761u + 1) % g.dim().volume();
          REQUIRE((labels.root_of(u) == labels.root_of(w)) == (ref[u] == ref[w]));
          REQUIRE(labels.cluster_size_of(u) ==
                  std::count(ref.begin(), ref.end(), ref[u]));
        }
      }
}

TEST_CASE("extreme configurations") {
  const CubeDim d(6);
  const auto empty = label_components(OccupiedGraph(d));
  CHECK(empty.component_count() == 64);
  CHECK(top_two(empty) == std::pair<std::uint32_t, std::uint32_t>{1, 1});
  CHECK(sum_squared_sizes(empty) == 64.0);
  const auto full = label_components(OccupiedGraph::full(d));
  CHECK(full.component_count() == 1);
  CHECK(top_two(full) == std::pair<std::uint32_t, std::uint32_t>{64, 0});
  CHECK(sum_squared_sizes(full) == 4096.0);
  CHECK(count_z_geq(full, 64) == 64);
  CHECK(count_z_geq(full, 65) == 0);
}

TEST_CASE("hand-built path on Q_3") {
  const CubeDim d(3);
  OccupiedGraph g(d);
  g.set(EdgeId::canonical(d, 0, 0), true);  // 0-1
  g.set(EdgeId::canonical(d, 1, 1), true);  // 1-3
  g.set(EdgeId::canonical(d, 4, 0), true);  // 4-5
  const auto l = label_components(g);
  CHECK(l.sizes_desc() == std::vector<std::uint32_t>{3, 2, 1, 1, 1});
  CHECK(cluster_size_of(l, 3) == 3);
  CHECK(cluster_size_of(l, 5) == 2);
  CHECK(count_z_geq(l, 2) == 5);
  CHECK(count_z_geq(l, 0) == 8);
  CHECK(sum_squared_sizes(l) == 9 + 4 + 3);
  const auto comps = l.components();
  std::size_t total = 0;
  for (const auto& c : comps) {
    total += c.size();
    CHECK(std::is_sorted(c.begin(), c.end()));
    for (Vertex v : c) CHECK(l.root_of(v) == l.root_of(c.front()));
  }
  CHECK(total == 8);
  CHECK(comps.size() == 5);
}

TEST_CASE("sizes sum to the volume") {
  const auto l = label_components(sample_subgraph(CubeDim(14), 1.0 / 14, {1, 0}));
  const auto& s = l.sizes_desc();
  CHECK(std::accumulate(s.begin(), s.end(), std::uint64_t{0}) == (1u << 14));
  CHECK(std::is_sorted(s.rbegin(), s.rend()));
}
