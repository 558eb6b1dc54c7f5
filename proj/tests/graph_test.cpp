#include "gainspec/graph.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace gainspec {
namespace {

std::vector<Edge> E(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> out;
  for (auto [u, v] : pairs) out.emplace_back(u, v);
  return out;
}

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {Edge(1, 1)}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {Edge(0, 3)}), std::invalid_argument);
  EXPECT_NO_THROW(Graph(0));
}

TEST(Graph, NeighboursSortedAndEdgeIndex) {
  Graph g(4, {Edge(3, 0), Edge(0, 1), Edge(2, 0)});
  EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 2, 3}));
  ASSERT_TRUE(g.edge_index(3, 0));
  EXPECT_EQ(g.edges()[*g.edge_index(3, 0)], Edge(0, 3));
  EXPECT_FALSE(g.edge_index(1, 2));
  EXPECT_FALSE(g.adjacent(0, 7));
}

TEST(InducedSubgraph, Examples) {
  const Graph c4 = named::cycle(4);
  auto k2 = induced_subgraph(c4, std::vector<Vertex>{0, 1});
  EXPECT_EQ(k2.graph, named::complete(2));

  auto none = induced_subgraph(c4, std::vector<Vertex>{});
  EXPECT_EQ(none.graph.order(), 0u);

  // Brute force over the seven edges of C6-tilde: v1v2, v5v6, v6v1 and the
  // chord v2v5 survive, which is a 4-cycle 0-1-4-5-0.
  auto sub = induced_subgraph(named::c6_tilde(), std::vector<Vertex>{0, 1, 4, 5});
  EXPECT_EQ(sub.original, (VertexSet{0, 1, 4, 5}));
  EXPECT_EQ(sub.graph, Graph(4, E({{0, 1}, {2, 3}, {0, 3}, {1, 2}})));
  EXPECT_EQ(sub.graph, named::cycle(4));
}

TEST(InducedSubgraph, AllVerticesIsIdentityAndErrors) {
  const Graph p = named::petersen();
  VertexSet all(p.order());
  for (Vertex v = 0; v < p.order(); ++v) all[v] = v;
  EXPECT_EQ(induced_subgraph(p, all).graph, p);
  EXPECT_THROW(induced_subgraph(p, std::vector<Vertex>{10}), std::invalid_argument);
  EXPECT_THROW(induced_subgraph(p, std::vector<Vertex>{1, 1}), std::invalid_argument);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(Graph(4, E({{0, 1}, {2, 3}}))),
            (std::vector<VertexSet>{{0, 1}, {2, 3}}));
  EXPECT_EQ(components(named::complete_bipartite(3, 3)).size(), 1u);
  EXPECT_EQ(components(named::empty(3)), (std::vector<VertexSet>{{0}, {1}, {2}}));
  EXPECT_TRUE(components(Graph(0)).empty());
}

TEST(Bipartition, Examples) {
  const Bipartition c4 = bipartition(named::cycle(4));
  EXPECT_TRUE(c4.bipartite());
  EXPECT_EQ(c4.side, (std::vector<int>{0, 1, 0, 1}));
  EXPECT_FALSE(is_bipartite(named::cycle(3)));

  // The chord v2v5 joins opposite colour classes of the 6-cycle.
  const Graph c6t = named::c6_tilde();
  const Bipartition b = bipartition(c6t);
  ASSERT_TRUE(b.bipartite());
  for (const Edge& e : c6t.edges()) EXPECT_NE(b.side[e.u], b.side[e.v]);
}

TEST(Bipartition, PerComponentFlags) {
  const Graph g = disjoint_union(named::cycle(3), named::cycle(4));
  const Bipartition b = bipartition(g);
  EXPECT_EQ(b.component_bipartite, (std::vector<bool>{false, true}));
  EXPECT_FALSE(b.bipartite());
}

TEST(EdgeCut, Examples) {
  EXPECT_EQ(edge_cut(named::complete(2), std::vector<Vertex>{0}), E({{0, 1}}));
  EXPECT_EQ(edge_cut(named::complete_bipartite(2, 2), std::vector<Vertex>{0, 1}).size(), 4u);
  EXPECT_EQ(edge_cut(named::cycle(6), std::vector<Vertex>{0, 1, 2}), E({{0, 5}, {2, 3}}));
  EXPECT_THROW(edge_cut(named::cycle(6), std::vector<Vertex>{9}), std::invalid_argument);
}

TEST(DeleteEdges, Examples) {
  EXPECT_EQ(delete_edges(named::complete(2), E({{0, 1}})), named::empty(2));
  EXPECT_EQ(delete_edges(named::cycle(4), E({{0, 3}})), named::path(4));
  EXPECT_EQ(delete_edges(named::c6_tilde(), E({{1, 4}})), named::cycle(6));
  EXPECT_THROW(delete_edges(named::cycle(4), E({{0, 2}})), std::invalid_argument);
}

TEST(Named, Sizes) {
  EXPECT_EQ(named::complete_bipartite(3, 3).order(), 6u);
  EXPECT_EQ(named::complete_bipartite(3, 3).size(), 9u);
  EXPECT_EQ(named::c6_tilde().order(), 6u);
  EXPECT_EQ(named::c6_tilde().size(), 7u);
  EXPECT_EQ(named::path(4).size(), 3u);
  EXPECT_EQ(named::star(4).size(), 4u);
  EXPECT_EQ(named::petersen().size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(named::petersen().degree(v), 3u);
  EXPECT_THROW(named::cycle(2), std::invalid_argument);
}

TEST(Pendant, Examples) {
  EXPECT_EQ(pendant_vertices(named::path(4)), (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(pendant_vertices(named::cycle(4)).empty());
  EXPECT_EQ(pendant_vertices(named::star(4)), (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(Kronecker, Examples) {
  // K2 x K2: candidate pairs (0,0)(1,1) and (0,1)(1,0) only.
  EXPECT_EQ(kronecker_graph(named::complete(2), named::complete(2)),
            Graph(4, E({{0, 3}, {1, 2}})));
  // C3 x K2 enumerated: (v,u)~(v',1-u) for v != v' gives the 6-cycle
  // 0-3-4-1-2-5-0.
  const Graph c3k2 = kronecker_graph(named::cycle(3), named::complete(2));
  EXPECT_EQ(c3k2, Graph(6, E({{0, 3}, {3, 4}, {4, 1}, {1, 2}, {2, 5}, {5, 0}})));
  EXPECT_EQ(kronecker_graph(named::empty(3), named::petersen()).size(), 0u);
  EXPECT_EQ(kronecker_graph(named::empty(3), named::petersen()).order(), 30u);
}

TEST(DisjointUnion, OffsetsSecondOperand) {
  const Graph g = disjoint_union(named::complete(2), named::path(3));
  EXPECT_EQ(g, Graph(5, E({{0, 1}, {2, 3}, {3, 4}})));
}

TEST(Star, Recognition) {
  EXPECT_TRUE(is_star(E({{0, 1}})));
  EXPECT_TRUE(is_star(E({{2, 1}, {1, 5}, {1, 0}})));
  EXPECT_FALSE(is_star(E({{0, 1}, {2, 3}})));
  EXPECT_FALSE(is_star(std::vector<Edge>{}));
}

TEST(RandomGnp, DeterministicAndBounded) {
  EXPECT_EQ(random_gnp(8, 0.5, 1), random_gnp(8, 0.5, 1));
  EXPECT_EQ(random_gnp(6, 0.0, 3).size(), 0u);
  EXPECT_EQ(random_gnp(6, 1.0, 3), named::complete(6));
  EXPECT_THROW(random_gnp(3, 1.5, 0), std::invalid_argument);
}

class GraphProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GraphProperties, AgainstBruteForce) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Graph g = random_gnp(n, p, rng());

    // Bipartite iff no odd simple cycle.
    EXPECT_EQ(is_bipartite(g), !oracle::has_odd_cycle(g));

    // Deleting a cut separates vs from its complement.
    VertexSet vs;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) vs.push_back(v);
    const Graph rest = delete_edges(g, edge_cut(g, vs));
    std::vector<bool> inside(n, false);
    for (Vertex v : vs) inside[v] = true;
    for (const VertexSet& comp : components(rest)) {
      for (Vertex v : comp) EXPECT_EQ(inside[v], inside[comp.front()]);
    }

    // Bipartite double: twice the edges, bipartite, connected iff g is
    // connected and non-bipartite.
    const Graph d = kronecker_graph(g, named::complete(2));
    EXPECT_EQ(d.size(), 2 * g.size());
    EXPECT_TRUE(is_bipartite(d));
    EXPECT_EQ(oracle::connected(d), oracle::connected(g) && !is_bipartite(g))
        << "n=" << n << " m=" << g.size();
    EXPECT_EQ(is_connected(g), oracle::connected(g));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphProperties, ::testing::Values(1u, 2u, 3u, 4u));

}  // namespace
}  // namespace gainspec
