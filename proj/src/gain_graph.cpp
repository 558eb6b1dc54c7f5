#include "gainspec/gain_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace gainspec {

UnitComplex::UnitComplex(std::complex<double> z) {
  const double r = std::abs(z);
  if (!std::isfinite(r) || r == 0.0) {
    throw std::invalid_argument("UnitComplex: cannot normalise zero or non-finite value");
  }
  value_ = z / r;
}

UnitComplex UnitComplex::from_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("UnitComplex: non-finite angle");
  return UnitComplex(std::complex<double>(std::cos(theta), std::sin(theta)));
}

UnitComplex UnitComplex::checked(std::complex<double> z, double tol) {
  if (!(std::abs(std::abs(z) - 1.0) <= tol)) {
    throw std::invalid_argument("UnitComplex: modulus " + std::to_string(std::abs(z)) +
                                " is not 1");
  }
  return UnitComplex(z);
}

GainGraph::GainGraph(Graph g) : graph_(std::move(g)), forward_(graph_.size()) {}

GainGraph::GainGraph(Graph g, std::vector<UnitComplex> forward)
    : graph_(std::move(g)), forward_(std::move(forward)) {
  if (forward_.size() != graph_.size()) {
    throw std::invalid_argument("GainGraph: expected " + std::to_string(graph_.size()) +
                                " gains, got " + std::to_string(forward_.size()));
  }
}

UnitComplex GainGraph::gain(Vertex u, Vertex v) const {
  auto idx = graph_.edge_index(u, v);
  if (!idx) {
    throw std::invalid_argument("gain: (" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
  }
  const UnitComplex z = forward_[*idx];
  return u < v ? z : z.inverse();
}

GainGraph GainGraph::with_gain(Vertex u, Vertex v, std::complex<double> z) const {
  return with_gain(u, v, UnitComplex::checked(z));
}

GainGraph GainGraph::with_gain(Vertex u, Vertex v, UnitComplex z) const {
  auto idx = graph_.edge_index(u, v);
  if (!idx) {
    throw std::invalid_argument("with_gain: (" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
  }
  GainGraph out = *this;
  out.forward_[*idx] = u < v ? z : z.inverse();
  return out;
}

GainGraph all_ones(const Graph& g) { return GainGraph(g); }

UnitComplex cycle_gain(const GainGraph& phi, std::span<const Vertex> cycle) {
  std::vector<Vertex> vs(cycle.begin(), cycle.end());
  if (vs.size() >= 2 && vs.front() == vs.back()) vs.pop_back();
  if (vs.size() < 3) throw std::invalid_argument("cycle_gain: cycle needs at least 3 vertices");
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle_gain: repeated vertex");
  }
  UnitComplex product;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex a = vs[i];
    const Vertex b = vs[(i + 1) % vs.size()];
    if (!phi.graph().adjacent(a, b)) {
      throw std::invalid_argument("cycle_gain: " + std::to_string(a) + " and " +
                                  std::to_string(b) + " are not adjacent");
    }
    product = product * phi.gain(a, b);
  }
  return product;
}

GainGraph switch_gains(const GainGraph& phi, const SwitchingFunction& zeta) {
  if (zeta.size() != phi.order()) {
    throw std::invalid_argument("switch_gains: switching function has wrong length");
  }
  std::vector<UnitComplex> forward;
  forward.reserve(phi.size());
  const auto& edges = phi.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    forward.push_back(zeta[edges[i].u].inverse() * phi.forward_gains()[i] * zeta[edges[i].v]);
  }
  return GainGraph(phi.graph(), std::move(forward));
}

BalanceCertificate is_balanced(const GainGraph& phi) {
  const Graph& g = phi.graph();
  const std::size_t n = g.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  SwitchingFunction zeta(n);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<bool> tree_edge(g.size(), false);

  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = u;
        depth[w] = depth[u] + 1;
        tree_edge[*g.edge_index(u, w)] = true;
        // zeta(u)^-1 gain(u,w) zeta(w) = 1.
        zeta[w] = zeta[u] * phi.gain(u, w).inverse();
        queue.push_back(w);
      }
    }
  }

  BalanceCertificate cert;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (tree_edge[i]) continue;
    const Vertex u = edges[i].u;
    const Vertex v = edges[i].v;
    const UnitComplex switched = zeta[u].inverse() * phi.forward_gains()[i] * zeta[v];
    if (distance(switched, UnitComplex()) <= kBalanceTolerance) continue;

    // u -> ... -> lca -> ... -> v, closed by v -> u.
    std::vector<Vertex> up_u{u};
    std::vector<Vertex> up_v{v};
    Vertex a = u;
    Vertex b = v;
    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
    while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
    while (a != b) {
      up_u.push_back(a = parent[a]);
      up_v.push_back(b = parent[b]);
    }
    up_v.pop_back();
    cert.cycle = std::move(up_u);
    cert.cycle.insert(cert.cycle.end(), up_v.rbegin(), up_v.rend());
    cert.cycle_gain = cycle_gain(phi, cert.cycle);
    cert.balanced = false;
    return cert;
  }
  cert.switching = std::move(zeta);
  return cert;
}

GainGraph kronecker(const GainGraph& phi, const Graph& h) {
  Graph product = kronecker_graph(phi.graph(), h);
  const std::size_t m = h.order();
  std::vector<UnitComplex> forward(product.size());
  for (std::size_t i = 0; i < product.size(); ++i) {
    const Edge& e = product.edges()[i];
    forward[i] = phi.gain(e.u / m, e.v / m);
  }
  return GainGraph(std::move(product), std::move(forward));
}

GainGraph bipartite_double(const GainGraph& phi) { return kronecker(phi, named::complete(2)); }

GainGraph random_gain_graph(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<UnitComplex> forward;
  forward.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) forward.push_back(UnitComplex::from_angle(angle(rng)));
  return GainGraph(g, std::move(forward));
}

SwitchingFunction random_switching(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  SwitchingFunction zeta;
  zeta.reserve(n);
  for (std::size_t i = 0; i < n; ++i) zeta.push_back(UnitComplex::from_angle(angle(rng)));
  return zeta;
}

GainGraph induced_gain_subgraph(const GainGraph& phi, std::span<const Vertex> vs) {
  InducedSubgraph sub = induced_subgraph(phi.graph(), vs);
  std::vector<UnitComplex> forward;
  forward.reserve(sub.graph.size());
  for (const Edge& e : sub.graph.edges()) {
    forward.push_back(phi.gain(sub.original[e.u], sub.original[e.v]));
  }
  return GainGraph(std::move(sub.graph), std::move(forward));
}

GainGraph delete_gain_edges(const GainGraph& phi, std::span<const Edge> s) {
  Graph rest = delete_edges(phi.graph(), s);
  std::vector<UnitComplex> forward;
  forward.reserve(rest.size());
  for (const Edge& e : rest.edges()) forward.push_back(phi.gain(e.u, e.v));
  return GainGraph(std::move(rest), std::move(forward));
}

GainGraph disjoint_union(const GainGraph& a, const GainGraph& b) {
  std::vector<UnitComplex> forward = a.forward_gains();
  forward.insert(forward.end(), b.forward_gains().begin(), b.forward_gains().end());
  // Shifting b keeps its edges after a's in sorted order.
  return GainGraph(disjoint_union(a.graph(), b.graph()), std::move(forward));
}

}  // namespace gainspec
