#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gainspec/graph.hpp"

namespace gainspec {

/// Tolerance on |z| - 1 for values accepted as unit complex numbers.
inline constexpr double kUnitTolerance = 1e-12;
/// Tolerance on |gain - 1| used by every balance decision.
inline constexpr double kBalanceTolerance = 1e-9;

/// Element of the circle group T. Always renormalised to modulus one, so the
/// inverse is the exact conjugate.
class UnitComplex {
 public:
  UnitComplex() = default;
  /// Renormalises z; throws std::invalid_argument if z is zero or non-finite.
  explicit UnitComplex(std::complex<double> z);

  static UnitComplex from_angle(double theta);
  /// Like the constructor, but rejects |z| farther than `tol` from 1.
  static UnitComplex checked(std::complex<double> z, double tol = kUnitTolerance);

  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }
  std::complex<double> value() const { return value_; }
  /// Principal argument in (-pi, pi].
  double angle() const { return std::arg(value_); }
  UnitComplex inverse() const { return UnitComplex(std::conj(value_), Trusted{}); }

  friend UnitComplex operator*(UnitComplex a, UnitComplex b) {
    return UnitComplex(a.value_ * b.value_);
  }
  /// |a - b|.
  friend double distance(UnitComplex a, UnitComplex b) { return std::abs(a.value_ - b.value_); }

 private:
  struct Trusted {};
  UnitComplex(std::complex<double> z, Trusted) : value_(z) {}

  std::complex<double> value_{1.0, 0.0};
};

/// Per-vertex switching values zeta.
using SwitchingFunction = std::vector<UnitComplex>;

/// A graph with a gain on every oriented edge, gain(v,u) = gain(u,v)^-1.
///
/// Only the gain on the orientation u < v is stored; the reverse orientation
/// is derived by conjugation, so the inverse property holds exactly.
class GainGraph {
 public:
  GainGraph() = default;
  /// All gains equal to one.
  explicit GainGraph(Graph g);
  /// `forward[i]` is the gain of edges()[i] oriented from its smaller endpoint.
  GainGraph(Graph g, std::vector<UnitComplex> forward);

  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }

  /// Gain of the oriented edge u -> v; throws std::invalid_argument on a non-edge.
  UnitComplex gain(Vertex u, Vertex v) const;
  const std::vector<UnitComplex>& forward_gains() const { return forward_; }

  /// Copy with gain(u,v) = z and gain(v,u) = conj(z). Throws on a non-edge or
  /// when |z| differs from 1 by more than kUnitTolerance.
  GainGraph with_gain(Vertex u, Vertex v, std::complex<double> z) const;
  GainGraph with_gain(Vertex u, Vertex v, UnitComplex z) const;

 private:
  Graph graph_;
  std::vector<UnitComplex> forward_;
};

GainGraph all_ones(const Graph& g);

/// Product of gains along v1 -> v2 -> ... -> vk -> v1. The closing vertex may
/// be repeated at the end or omitted. Throws std::invalid_argument unless the
/// sequence is a simple cycle of length >= 3 in the underlying graph.
UnitComplex cycle_gain(const GainGraph& phi, std::span<const Vertex> cycle);

/// gain'(u,v) = zeta(u)^-1 gain(u,v) zeta(v).
GainGraph switch_gains(const GainGraph& phi, const SwitchingFunction& zeta);

/// Outcome of the balance test together with a checkable witness.
struct BalanceCertificate {
  bool balanced = true;
  /// Set when balanced: switching by it makes every gain equal to one.
  std::optional<SwitchingFunction> switching;
  /// Set when unbalanced: a simple cycle (without the repeated endpoint)
  /// whose gain differs from one, and that gain.
  std::vector<Vertex> cycle;
  UnitComplex cycle_gain;
};

/// Spanning-forest balance test. Each component is rooted at its lowest
/// vertex with zeta = 1 and zeta is propagated along a BFS tree so that tree
/// edges switch to gain one; the first non-tree edge whose switched gain is
/// not within kBalanceTolerance of one yields the witness cycle.
BalanceCertificate is_balanced(const GainGraph& phi);

/// Gains of phi (x) h are inherited from the first factor's oriented edge.
GainGraph kronecker(const GainGraph& phi, const Graph& h);
/// phi (x) K2.
GainGraph bipartite_double(const GainGraph& phi);

/// Independent uniform angles in [0, 2pi) per edge.
GainGraph random_gain_graph(const Graph& g, std::uint64_t seed);
/// Independent uniform switching values.
SwitchingFunction random_switching(std::size_t n, std::uint64_t seed);

/// Restriction of phi to the subgraph induced by vs (relabelled ascending).
GainGraph induced_gain_subgraph(const GainGraph& phi, std::span<const Vertex> vs);
/// Same gains on the surviving edges.
GainGraph delete_gain_edges(const GainGraph& phi, std::span<const Edge> s);
/// Second operand's vertices are shifted by a.order().
GainGraph disjoint_union(const GainGraph& a, const GainGraph& b);

}  // namespace gainspec
