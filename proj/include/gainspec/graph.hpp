#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gainspec {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Edges are kept sorted and every neighbour list is sorted ascending, so
/// iteration order is a pure function of the edge set. Instances are
/// immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws std::invalid_argument on self-loops, duplicates, or endpoints >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Position of edge {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  // edge_ids_[v][k] is the index in edges_ of {v, adjacency_[v][k]}.
  std::vector<std::vector<std::size_t>> edge_ids_;
};

/// Result of taking an induced subgraph: `original[i]` is the parent vertex
/// that became vertex i.
struct InducedSubgraph {
  Graph graph;
  VertexSet original;
};

/// Vertices are relabelled in ascending order of their parent index.
/// Throws std::invalid_argument for out-of-range or repeated vertices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

/// Connected components, each sorted, ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Two-colouring of every component by BFS from its lowest vertex.
struct Bipartition {
  /// 0 for side X, 1 for side Y; the component root is always on X.
  std::vector<int> side;
  std::vector<std::size_t> component_of;
  /// One flag per entry of components(g).
  std::vector<bool> component_bipartite;

  bool bipartite() const;
};

Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// All edges with exactly one endpoint in vs.
std::vector<Edge> edge_cut(const Graph& g, std::span<const Vertex> vs);

/// Throws std::invalid_argument if some entry of s is not an edge of g.
Graph delete_edges(const Graph& g, std::span<const Edge> s);

std::vector<Vertex> pendant_vertices(const Graph& g);
std::vector<Vertex> isolated_vertices(const Graph& g);

/// Vertex (v, u) of the product is numbered v * h.order() + u.
Graph kronecker_graph(const Graph& g, const Graph& h);

/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// True if all edges share one common vertex (and there is at least one edge).
bool is_star(std::span<const Edge> edges);

/// Erdos-Renyi G(n, p), deterministic for a fixed seed.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

/// Named constructions with fixed vertex numbering.
namespace named {

Graph empty(std::size_t n);
/// 0-1-2-...-(n-1).
Graph path(std::size_t n);
/// path(n) plus the edge {0, n-1}; n >= 3.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Side X = 0..s-1, side Y = s..s+t-1.
Graph complete_bipartite(std::size_t s, std::size_t t);
/// K_{1,t} with centre 0.
Graph star(std::size_t t);
/// cycle(6) on v1..v6 = 0..5 plus the chord v2v5 = {1, 4}.
Graph c6_tilde();
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen();

}  // namespace named

}  // namespace gainspec
