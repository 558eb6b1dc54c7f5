#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gainspec/gain_graph.hpp"
#include "gainspec/matching.hpp"
#include "gainspec/spectral.hpp"

namespace gainspec {

/// A gap E - 2mu at or below this is treated as equality.
inline constexpr double kTightTolerance = 1e-6;
/// Strict inequalities must hold by more than this.
inline constexpr double kStrictMargin = 1e-8;
/// Slack allowed on non-strict energy inequalities.
inline constexpr double kMonotoneSlack = 1e-8;

/// Energy versus twice the matching number, and whether the numeric and the
/// structural characterisations of equality agree.
struct BoundReport {
  double energy = 0.0;
  std::size_t mu = 0;
  double gap = 0.0;
  bool numerically_tight = false;
  bool structurally_extremal = false;
  bool consistent = false;

  Spectrum spectrum;
  MatchingResult matching;
  BalanceCertificate balance;
};

BoundReport bound_report(const GainGraph& phi);

/// Balanced, and every component is an isolated vertex or some K_{t,t}.
bool is_extremal_structure(const GainGraph& phi);

/// Exact structural recognisers for the fixed graphs the lemmas name.
bool is_regular_complete_bipartite(const Graph& g);
bool is_p4(const Graph& g);
bool is_c6_tilde(const Graph& g);

/// Outcome of checking one lemma over one or more instances.
///
/// Instances whose preconditions fail are counted in `skips` with a note and
/// never as passes. `vacuous` counts instances that met the preconditions but
/// whose hypothesis (usually tightness) did not hold.
struct LemmaReport {
  std::string lemma;
  std::size_t instances = 0;
  std::size_t vacuous = 0;
  std::size_t skips = 0;
  std::vector<std::string> skip_notes{};
  std::vector<std::string> violations{};
  /// Smallest observed value of the quantity the lemma requires to be
  /// positive (or non-negative), when the lemma has one.
  std::optional<double> worst_margin{};

  bool passed() const { return violations.empty(); }

  void skip(std::string note);
  void violate(std::string what);
  void observe_margin(double margin);
  void merge(const LemmaReport& other);
};

/// Stable identifiers used in reports.
namespace lemma_id {
inline constexpr const char* kEnergyBound = "energy-bound";
inline constexpr const char* kEdgeCut = "edge-cut-monotonicity";
inline constexpr const char* kPendant = "pendant-strictness";
inline constexpr const char* kC6Tilde = "c6tilde-energy";
inline constexpr const char* kPerfectMatching = "perfect-matching-necessity";
inline constexpr const char* kNonBipartite = "nonbipartite-strictness";
inline constexpr const char* kTightSubgraph = "tight-subgraph";
inline constexpr const char* kBalance = "balance-and-ktt-necessity";
}  // namespace lemma_id

/// E >= 2mu - kTightTolerance, and numerically_tight == structurally_extremal.
LemmaReport check_energy_bound(std::span<const GainGraph> corpus);

/// Deleting the edge cut of vs never raises the energy, and lowers it
/// strictly when the cut is a star.
LemmaReport check_edge_cut_lemma(const GainGraph& phi, std::span<const Vertex> vs);

/// Connected, at least three vertices, and a pendant vertex imply E > 2mu.
LemmaReport check_pendant_lemma(const GainGraph& phi);

/// Every gain assignment on C6-tilde has energy above 6. Checks the all-ones
/// assignment followed by `trials` uniform random ones.
LemmaReport check_c6tilde_lemma(std::uint64_t seed, std::size_t trials);

/// Tight graphs without isolated vertices have a perfect matching.
LemmaReport check_perfect_matching_lemma(std::span<const GainGraph> corpus);

/// Connected non-bipartite graphs are never tight.
LemmaReport check_nonbipartite_lemma(std::span<const GainGraph> corpus);

/// If phi is tight and mu splits additively over vs and its complement, the
/// restriction to vs is tight and is neither P4 nor C6-tilde.
LemmaReport check_subgraph_lemma(const GainGraph& phi, std::span<const Vertex> vs);

/// Tight connected bipartite graphs are balanced copies of K_{t,t}.
LemmaReport check_balance_lemma(std::span<const GainGraph> corpus);

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  std::size_t nmax = 10;
};

/// Number of random C6-tilde assignments the suite uses for `trials`.
std::size_t c6tilde_trials(std::size_t trials);

/// Builds the seeded corpora and runs every checker, one report per lemma in
/// the order of lemma_id.
std::vector<LemmaReport> run_lemma_suite(const SuiteOptions& options);

}  // namespace gainspec
