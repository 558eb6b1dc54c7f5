#include "gainspec/corpus.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace gainspec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void partitions_into(std::size_t remaining, std::size_t largest, std::vector<std::size_t>& prefix,
                     std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

std::vector<GainGraph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t nmin,
                                     std::size_t nmax) {
  if (nmin > nmax) throw std::invalid_argument("random_corpus: nmin > nmax");
  std::vector<GainGraph> out;
  out.reserve(count);
  constexpr std::size_t kProbabilities = std::size(kCorpusProbabilities);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(derive_seed(seed, 1, i));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(nmin, nmax)(rng);
    const double p = kCorpusProbabilities[i % kProbabilities];
    Graph g = random_gnp(n, p, rng());
    out.push_back(random_gain_graph(g, rng()));
  }
  return out;
}

GainGraph extremal_union(std::span<const std::size_t> sizes, std::size_t isolated) {
  Graph g;
  for (std::size_t t : sizes) g = disjoint_union(g, named::complete_bipartite(t, t));
  return all_ones(disjoint_union(g, named::empty(isolated)));
}

std::vector<std::vector<std::size_t>> partitions(std::size_t total) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  partitions_into(total, total, prefix, out);
  return out;
}

GainGraph random_gain_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  }
  return random_gain_graph(Graph(n, edges), rng());
}

GainGraph rotated_ktt(std::size_t t, double angle) {
  if (t == 0) throw std::invalid_argument("rotated_ktt: t must be positive");
  return all_ones(named::complete_bipartite(t, t)).with_gain(0, t, UnitComplex::from_angle(angle));
}

}  // namespace gainspec
