#pragma once

#include <cstddef>
#include <vector>

#include "gainspec/graph.hpp"

namespace gainspec {

inline constexpr std::size_t kMatchingOracleMaxOrder = 12;

struct MatchingResult {
  /// Sorted.
  std::vector<Edge> matched_edges;
  std::size_t mu = 0;
  /// Sorted endpoints of matched_edges.
  std::vector<Vertex> saturated;
};

/// Edmonds' blossom algorithm on a general graph. Free vertices are grown in
/// index order and neighbours are scanned ascending, so the edge set is
/// deterministic for a given graph.
MatchingResult maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// Exact matching number by include/exclude recursion over the edges.
/// Throws std::invalid_argument above kMatchingOracleMaxOrder vertices.
std::size_t matching_oracle(const Graph& g);

}  // namespace gainspec
