#include "gainspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <string>

namespace gainspec {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

Graph::Graph(std::size_t n) : adjacency_(n), edge_ids_(n) {}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : edges_(edges.begin(), edges.end()), adjacency_(n), edge_ids_(n) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                  " out of range for order " + std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + "}");
  }

  // Neighbour lists are sorted together with their edge ids.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> lists(n);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    lists[edges_[i].u].emplace_back(edges_[i].v, i);
    lists[edges_[i].v].emplace_back(edges_[i].u, i);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(lists[v].begin(), lists[v].end());
    adjacency_[v].reserve(lists[v].size());
    edge_ids_[v].reserve(lists[v].size());
    for (auto [w, id] : lists[v]) {
      adjacency_[v].push_back(w);
      edge_ids_[v].push_back(id);
    }
  }
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return std::nullopt;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return std::nullopt;
  return edge_ids_[u][static_cast<std::size_t>(it - list.begin())];
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  VertexSet sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  }
  if (!sorted.empty() && sorted.back() >= g.order()) {
    throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(sorted.back()) +
                                " out of range");
  }
  std::vector<std::size_t> local(g.order(), g.order());
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = i;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != g.order() && local[e.v] != g.order()) {
      edges.emplace_back(local[e.u], local[e.v]);
    }
  }
  return {Graph(sorted.size(), edges), std::move(sorted)};
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool Bipartition::bipartite() const {
  return std::all_of(component_bipartite.begin(), component_bipartite.end(),
                     [](bool b) { return b; });
}

Bipartition bipartition(const Graph& g) {
  const std::size_t n = g.order();
  Bipartition result;
  result.side.assign(n, -1);
  result.component_of.assign(n, 0);
  std::size_t comp = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (result.side[root] != -1) continue;
    bool ok = true;
    result.side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      result.component_of[u] = comp;
      for (Vertex w : g.neighbors(u)) {
        if (result.side[w] == -1) {
          result.side[w] = 1 - result.side[u];
          queue.push_back(w);
        } else if (result.side[w] == result.side[u]) {
          ok = false;
        }
      }
    }
    result.component_bipartite.push_back(ok);
    ++comp;
  }
  return result;
}

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite(); }

std::vector<Edge> edge_cut(const Graph& g, std::span<const Vertex> vs) {
  std::vector<bool> inside(g.order(), false);
  for (Vertex v : vs) {
    if (v >= g.order()) {
      throw std::invalid_argument("edge_cut: vertex " + std::to_string(v) + " out of range");
    }
    inside[v] = true;
  }
  std::vector<Edge> cut;
  for (const Edge& e : g.edges()) {
    if (inside[e.u] != inside[e.v]) cut.push_back(e);
  }
  return cut;
}

Graph delete_edges(const Graph& g, std::span<const Edge> s) {
  std::vector<bool> drop(g.size(), false);
  for (const Edge& e : s) {
    auto idx = g.edge_index(e.u, e.v);
    if (!idx) {
      throw std::invalid_argument("delete_edges: {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} is not an edge");
    }
    drop[*idx] = true;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!drop[i]) kept.push_back(g.edges()[i]);
  }
  return Graph(g.order(), kept);
}

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

Graph kronecker_graph(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size() * h.size());
  for (const Edge& ge : g.edges()) {
    for (const Edge& he : h.edges()) {
      // {v,v'} x {u,u'} yields (v,u)(v',u') and (v,u')(v',u).
      edges.emplace_back(ge.u * m + he.u, ge.v * m + he.v);
      edges.emplace_back(ge.u * m + he.v, ge.v * m + he.u);
    }
  }
  return Graph(g.order() * m, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges());
  const std::size_t offset = a.order();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + offset, e.v + offset);
  return Graph(a.order() + b.order(), edges);
}

bool is_star(std::span<const Edge> edges) {
  if (edges.empty()) return false;
  for (Vertex centre : {edges.front().u, edges.front().v}) {
    bool all = std::all_of(edges.begin(), edges.end(),
                           [centre](const Edge& e) { return e.u == centre || e.v == centre; });
    if (all) return true;
  }
  return false;
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_gnp: p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

namespace named {

Graph empty(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t s, std::size_t t) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < s; ++x) {
    for (Vertex y = 0; y < t; ++y) edges.emplace_back(x, s + y);
  }
  return Graph(s + t, edges);
}

Graph star(std::size_t t) { return complete_bipartite(1, t); }

Graph c6_tilde() {
  std::vector<Edge> edges = cycle(6).edges();
  edges.emplace_back(1, 4);
  return Graph(6, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

}  // namespace named

}  // namespace gainspec
