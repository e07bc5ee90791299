#include "qperc/gen.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qperc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr char kMagic[8] = {'Q', 'P', 'R', 'C', 'O', 'C', 'C', '1'};

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
}

template <class T>
void put_le(std::ostream& out, T value) {
  std::uint64_t raw = 0;
  std::memcpy(&raw, &value, sizeof(T));
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((raw >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw std::runtime_error("occupancy dump truncated");
  std::uint64_t raw = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) raw |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  T value{};
  std::memcpy(&value, &raw, sizeof(T));
  return value;
}

// Fills one plane: bit i set iff draw(base + i) < threshold.
void fill_plane(std::uint64_t* words, std::uint64_t plane_bits, std::uint64_t base, const EdgeUniforms& rng,
                double threshold) {
  for (std::uint64_t i = 0; i < plane_bits; i += 64) {
    const std::uint64_t stop = std::min<std::uint64_t>(64, plane_bits - i);
    std::uint64_t word = 0;
    for (std::uint64_t b = 0; b < stop; ++b) {
      word |= static_cast<std::uint64_t>(static_cast<double>(rng.draw(base + i + b)) < threshold) << b;
    }
    words[i / 64] = word;
  }
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream) {
  return splitmix64_mix(master_seed ^ splitmix64_mix(stream * kGolden + 0x632BE59BD9B4E019ull));
}

EdgeId EdgeId::canonical(const CubeDim& dim, Vertex vertex, int direction) {
  if (direction < 0 || direction >= dim.n()) throw std::invalid_argument("edge direction out of range");
  if (vertex >= dim.volume()) throw std::invalid_argument("edge vertex out of range");
  if ((vertex >> direction) & 1u) throw std::invalid_argument("edge vertex is not the canonical endpoint");
  return EdgeId{vertex, direction};
}

std::uint64_t EdgeId::plane_index() const {
  const std::uint64_t low = vertex & ((std::uint64_t{1} << direction) - 1);
  return ((vertex >> (direction + 1)) << direction) | low;
}

std::uint64_t EdgeId::ordinal(const CubeDim& dim) const {
  return (static_cast<std::uint64_t>(direction) << (dim.n() - 1)) + plane_index();
}

EdgeUniforms::EdgeUniforms(const SeedSpec& seed)
    : key_(splitmix64_mix(seed.master_seed ^ splitmix64_mix((seed.replicate_index + 1) * kGolden))) {}

std::uint64_t EdgeUniforms::draw(std::uint64_t ordinal) const {
  return splitmix64_mix(key_ + (ordinal + 1) * kGolden) >> 11;
}

OccupiedGraph::OccupiedGraph(const CubeDim& dim, double p)
    : dim_(dim),
      p_(p),
      words_per_plane_(static_cast<std::size_t>(((std::uint64_t{1} << (dim.n() - 1)) + 63) / 64)),
      bits_(words_per_plane_ * static_cast<std::size_t>(dim.n()), 0) {}

OccupiedGraph OccupiedGraph::full(const CubeDim& dim) {
  OccupiedGraph g(dim, 1.0);
  const std::uint64_t plane_bits = std::uint64_t{1} << (dim.n() - 1);
  for (int d = 0; d < dim.n(); ++d) {
    std::uint64_t* words = g.plane_data(d);
    for (std::size_t w = 0; w < g.words_per_plane_; ++w) words[w] = ~0ull;
    if (plane_bits % 64 != 0) words[g.words_per_plane_ - 1] = (std::uint64_t{1} << (plane_bits % 64)) - 1;
  }
  return g;
}

bool OccupiedGraph::occupied(const EdgeId& e) const {
  const std::uint64_t idx = e.plane_index();
  return (bits_[words_per_plane_ * e.direction + idx / 64] >> (idx % 64)) & 1u;
}

bool OccupiedGraph::occupied(Vertex v, int direction) const {
  return occupied(EdgeId{v & ~(Vertex{1} << direction), direction});
}

std::uint64_t OccupiedGraph::occupied_count() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::span<const std::uint64_t> OccupiedGraph::plane(int direction) const {
  return std::span<const std::uint64_t>(bits_).subspan(words_per_plane_ * direction, words_per_plane_);
}

bool OccupiedGraph::subset_of(const OccupiedGraph& other) const {
  if (!(dim_ == other.dim_)) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

void OccupiedGraph::set(const EdgeId& e, bool value) {
  const std::uint64_t idx = e.plane_index();
  std::uint64_t& word = bits_[words_per_plane_ * e.direction + idx / 64];
  const std::uint64_t bit = std::uint64_t{1} << (idx % 64);
  word = value ? (word | bit) : (word & ~bit);
}

OccupiedGraph sample_subgraph(const CubeDim& dim, double p, const SeedSpec& seed) {
  check_probability(p);
  OccupiedGraph g(dim, p);
  if (p == 0.0) return g;
  const EdgeUniforms rng(seed);
  const std::uint64_t plane_bits = std::uint64_t{1} << (dim.n() - 1);
  // uniform < p  <=>  draw < p * 2^53, both sides exact in double.
  const double threshold = std::ldexp(p, 53);
  for (int d = 0; d < dim.n(); ++d) fill_plane(g.plane_data(d), plane_bits, d * plane_bits, rng, threshold);
  return g;
}

std::vector<OccupiedGraph> coupled_sample(const CubeDim& dim, std::span<const double> p_list, const SeedSpec& seed) {
  for (std::size_t i = 0; i < p_list.size(); ++i) {
    check_probability(p_list[i]);
    if (i > 0 && p_list[i] < p_list[i - 1]) throw std::invalid_argument("coupled_sample needs ascending p_list");
  }
  std::vector<OccupiedGraph> graphs;
  graphs.reserve(p_list.size());
  for (double p : p_list) graphs.emplace_back(dim, p);
  if (p_list.empty()) return graphs;

  const EdgeUniforms rng(seed);
  const std::uint64_t plane_bits = std::uint64_t{1} << (dim.n() - 1);
  std::vector<double> thresholds;
  for (double p : p_list) thresholds.push_back(std::ldexp(p, 53));
  for (int d = 0; d < dim.n(); ++d) {
    for (std::uint64_t i = 0; i < plane_bits; ++i) {
      const double u = static_cast<double>(rng.draw(d * plane_bits + i));
      // First graph whose threshold exceeds the draw; it and all later ones
      // contain the edge.
      const auto first = std::upper_bound(thresholds.begin(), thresholds.end(), u) - thresholds.begin();
      for (auto g = static_cast<std::size_t>(first); g < graphs.size(); ++g)
        graphs[g].plane_data(d)[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return graphs;
}

double sprinkle_split(int n, double p, double epsilon) {
  if (n < 1) throw std::invalid_argument("sprinkle_split needs n >= 1");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("sprinkle_split needs epsilon >= 0");
  check_probability(p);
  const double q = sprinkle_density(n, epsilon);
  if (!(q < 1.0)) throw std::invalid_argument("sprinkle density epsilon/(2n) must be < 1");
  if (p < q) throw std::invalid_argument("sprinkle_split impossible: p < epsilon/(2n)");
  return (p - q) / (1.0 - q);
}

OccupiedGraph union_graphs(const OccupiedGraph& a, const OccupiedGraph& b) {
  if (!(a.dim() == b.dim())) throw std::invalid_argument("union_graphs: dimension mismatch");
  OccupiedGraph out(a.dim(), a.p() + b.p() - a.p() * b.p());
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] = a.bits_[i] | b.bits_[i];
  return out;
}

void write_occupancy(std::ostream& out, const OccupiedGraph& g, const SeedSpec& seed) {
  out.write(kMagic, sizeof(kMagic));
  put_le<std::uint32_t>(out, kOccupancyFormatVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.dim().n()));
  put_le<double>(out, g.p());
  put_le<std::uint64_t>(out, seed.master_seed);
  put_le<std::uint64_t>(out, seed.replicate_index);
  for (int d = 0; d < g.dim().n(); ++d)
    for (std::uint64_t w : g.plane(d)) put_le<std::uint64_t>(out, w);
  if (!out) throw std::runtime_error("failed writing occupancy dump");
}

OccupiedGraph read_occupancy(std::istream& in, SeedSpec* seed_out) {
  char magic[sizeof(kMagic)] = {};
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) throw std::runtime_error("not an occupancy dump");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kOccupancyFormatVersion) throw std::runtime_error("unsupported occupancy dump version");
  const auto n = get_le<std::uint32_t>(in);
  const double p = get_le<double>(in);
  SeedSpec seed;
  seed.master_seed = get_le<std::uint64_t>(in);
  seed.replicate_index = get_le<std::uint64_t>(in);
  OccupiedGraph g(CubeDim(static_cast<int>(n), kHardMaxDim), p);
  for (auto& w : g.bits_) w = get_le<std::uint64_t>(in);
  if (seed_out) *seed_out = seed;
  return g;
}

}  // namespace qperc
