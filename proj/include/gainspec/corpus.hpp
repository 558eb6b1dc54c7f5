#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gainspec/gain_graph.hpp"

namespace gainspec {

/// Deterministic per-instance seed from a base seed, a stream id, and an index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Edge probabilities used for random corpora.
inline constexpr double kCorpusProbabilities[] = {0.3, 0.5, 0.8};

/// `count` G(n, p) graphs with uniform random gains; n is uniform in
/// [nmin, nmax] and p cycles through kCorpusProbabilities.
std::vector<GainGraph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t nmin,
                                     std::size_t nmax);

/// All-ones disjoint union of K_{t,t} for each t in `sizes`, followed by
/// `isolated` isolated vertices.
GainGraph extremal_union(std::span<const std::size_t> sizes, std::size_t isolated = 0);

/// All multisets of positive part sizes summing to exactly `total`, each
/// listed in non-increasing order.
std::vector<std::vector<std::size_t>> partitions(std::size_t total);

/// Uniform random recursive tree (vertex i joins a uniform earlier vertex)
/// with uniform random gains.
GainGraph random_gain_tree(std::size_t n, std::uint64_t seed);

/// All-ones K_{t,t} with the gain of edge {0, t} replaced by e^{i angle}.
GainGraph rotated_ktt(std::size_t t, double angle);

}  // namespace gainspec
