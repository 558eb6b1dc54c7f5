#include "gainspec/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>

namespace gainspec {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Edmonds' algorithm with explicit blossom contraction through `base`.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, kNone), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<std::size_t> run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      Vertex v = find_augmenting_path(root);
      while (v != kNone) {
        const Vertex pv = parent_[v];
        const Vertex next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<bool> on_path(n_, false);
    while (true) {
      a = base_[a];
      on_path[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;

    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          // Odd cycle: contract the blossom onto its base.
          const Vertex cur = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> match_;
  std::vector<std::size_t> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

MatchingResult maximum_matching(const Graph& g) {
  const std::vector<std::size_t> match = Blossom(g).run();
  MatchingResult result;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (match[v] == kNone) continue;
    result.saturated.push_back(v);
    if (v < match[v]) result.matched_edges.emplace_back(v, match[v]);
  }
  result.mu = result.matched_edges.size();
  return result;
}

bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && 2 * maximum_matching(g).mu == g.order();
}

std::size_t matching_oracle(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMatchingOracleMaxOrder) {
    throw std::invalid_argument("matching_oracle: order " + std::to_string(n) + " exceeds " +
                                std::to_string(kMatchingOracleMaxOrder));
  }
  // best[mask] = matching number of the subgraph induced by `mask`. The lowest
  // vertex of the mask is either left unmatched or matched to a neighbour.
  std::vector<std::uint32_t> neighbour_mask(n, 0);
  for (const Edge& e : g.edges()) {
    neighbour_mask[e.u] |= 1u << e.v;
    neighbour_mask[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((1u << n) - 1);
  std::vector<std::size_t> best(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t mask = 1; mask <= full && full != 0; ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    std::size_t value = best[rest];
    for (std::uint32_t cand = neighbour_mask[v] & rest; cand != 0; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      value = std::max(value, 1 + best[rest & ~(1u << w)]);
    }
    best[mask] = value;
  }
  return best[full];
}

}  // namespace gainspec
