#include "gainspec/theorem_check.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <sstream>

#include "gainspec/corpus.hpp"

namespace gainspec {

namespace {

constexpr std::size_t kMaxNotes = 20;

std::string describe(const GainGraph& phi) {
  std::ostringstream os;
  os << "n=" << phi.order() << " m=" << phi.size();
  return os.str();
}

double gap_of(const GainGraph& phi) {
  return energy(phi) - 2.0 * static_cast<double>(maximum_matching(phi.graph()).mu);
}

bool is_tight(double gap) { return gap <= kTightTolerance; }

}  // namespace

BoundReport bound_report(const GainGraph& phi) {
  BoundReport r;
  r.spectrum = spectrum(phi);
  r.matching = maximum_matching(phi.graph());
  r.balance = is_balanced(phi);
  r.energy = r.spectrum.energy;
  r.mu = r.matching.mu;
  r.gap = r.energy - 2.0 * static_cast<double>(r.mu);
  r.numerically_tight = is_tight(r.gap);
  r.structurally_extremal = is_extremal_structure(phi);
  r.consistent = r.numerically_tight == r.structurally_extremal;
  return r;
}

bool is_regular_complete_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || n % 2 != 0 || !is_connected(g)) return false;
  const Bipartition parts = bipartition(g);
  if (!parts.bipartite()) return false;
  const auto x = static_cast<std::size_t>(std::count(parts.side.begin(), parts.side.end(), 0));
  const std::size_t t = n / 2;
  return x == t && g.size() == t * t;
}

bool is_extremal_structure(const GainGraph& phi) {
  if (!is_balanced(phi).balanced) return false;
  for (const VertexSet& comp : components(phi.graph())) {
    if (comp.size() == 1) continue;
    if (!is_regular_complete_bipartite(induced_subgraph(phi.graph(), comp).graph)) return false;
  }
  return true;
}

bool is_p4(const Graph& g) {
  if (g.order() != 4 || g.size() != 3 || !is_connected(g)) return false;
  std::vector<std::size_t> degrees;
  for (Vertex v = 0; v < 4; ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees == std::vector<std::size_t>{1, 1, 2, 2};
}

bool is_c6_tilde(const Graph& g) {
  if (g.order() != 6 || g.size() != 7 || !is_connected(g) || !is_bipartite(g)) return false;
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < 6; ++v) {
    if (g.degree(v) == 3) {
      hubs.push_back(v);
    } else if (g.degree(v) != 2) {
      return false;
    }
  }
  // The two degree-3 vertices must be joined by the chord, and removing it
  // must leave a 6-cycle.
  if (hubs.size() != 2 || !g.adjacent(hubs[0], hubs[1])) return false;
  const Edge chord(hubs[0], hubs[1]);
  const Graph rest = delete_edges(g, std::span<const Edge>(&chord, 1));
  return is_connected(rest);
}

void LemmaReport::skip(std::string note) {
  ++skips;
  if (skip_notes.size() < kMaxNotes) skip_notes.push_back(std::move(note));
}

void LemmaReport::violate(std::string what) { violations.push_back(std::move(what)); }

void LemmaReport::observe_margin(double margin) {
  worst_margin = worst_margin ? std::min(*worst_margin, margin) : margin;
}

void LemmaReport::merge(const LemmaReport& other) {
  if (lemma.empty()) lemma = other.lemma;
  instances += other.instances;
  vacuous += other.vacuous;
  skips += other.skips;
  for (const auto& note : other.skip_notes) {
    if (skip_notes.size() < kMaxNotes) skip_notes.push_back(note);
  }
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  if (other.worst_margin) observe_margin(*other.worst_margin);
}

LemmaReport check_energy_bound(std::span<const GainGraph> corpus) {
  LemmaReport report{.lemma = lemma_id::kEnergyBound};
  for (const GainGraph& phi : corpus) {
    const BoundReport b = bound_report(phi);
    ++report.instances;
    report.observe_margin(b.gap);
    if (b.gap < -kTightTolerance) {
      report.violate(describe(phi) + ": energy below 2mu, gap " + std::to_string(b.gap));
    }
    if (!b.consistent) {
      report.violate(describe(phi) + ": tight=" + std::to_string(b.numerically_tight) +
                     " but extremal=" + std::to_string(b.structurally_extremal) + ", gap " +
                     std::to_string(b.gap));
    }
  }
  return report;
}

LemmaReport check_edge_cut_lemma(const GainGraph& phi, std::span<const Vertex> vs) {
  LemmaReport report{.lemma = lemma_id::kEdgeCut};
  const std::vector<Edge> cut = edge_cut(phi.graph(), vs);
  if (cut.empty()) {
    report.skip(describe(phi) + ": empty edge cut");
    return report;
  }
  ++report.instances;
  const double before = energy(phi);
  const double after = energy(delete_gain_edges(phi, cut));
  const double margin = before - after;
  report.observe_margin(margin);
  if (margin < -kMonotoneSlack) {
    report.violate(describe(phi) + ": cut raised energy by " + std::to_string(-margin));
  }
  if (is_star(cut) && !(margin > kStrictMargin)) {
    report.violate(describe(phi) + ": star cut did not lower energy strictly, margin " +
                   std::to_string(margin));
  }
  return report;
}

LemmaReport check_pendant_lemma(const GainGraph& phi) {
  LemmaReport report{.lemma = lemma_id::kPendant};
  const Graph& g = phi.graph();
  if (g.order() < 3 || !is_connected(g) || pendant_vertices(g).empty()) {
    report.skip(describe(phi) + ": needs a connected graph on >= 3 vertices with a pendant vertex");
    return report;
  }
  ++report.instances;
  const double gap = gap_of(phi);
  report.observe_margin(gap);
  if (!(gap > kStrictMargin)) {
    report.violate(describe(phi) + ": pendant graph is tight, gap " + std::to_string(gap));
  }
  return report;
}

LemmaReport check_c6tilde_lemma(std::uint64_t seed, std::size_t trials) {
  LemmaReport report{.lemma = lemma_id::kC6Tilde};
  const Graph c6t = named::c6_tilde();
  const std::size_t mu = maximum_matching(c6t).mu;
  for (std::size_t t = 0; t <= trials; ++t) {
    const GainGraph phi = t == 0 ? all_ones(c6t) : random_gain_graph(c6t, derive_seed(seed, 3, t));
    ++report.instances;
    const double e = energy(phi);
    report.observe_margin(e - 6.0);
    if (!(e > 6.0 + kStrictMargin)) {
      report.violate("trial " + std::to_string(t) + ": energy " + std::to_string(e) + " <= 6");
    }
    if (mu != 3 || is_tight(e - 2.0 * static_cast<double>(mu))) {
      report.violate("trial " + std::to_string(t) + ": inconsistent with the energy bound");
    }
  }
  return report;
}

LemmaReport check_perfect_matching_lemma(std::span<const GainGraph> corpus) {
  LemmaReport report{.lemma = lemma_id::kPerfectMatching};
  for (const GainGraph& phi : corpus) {
    if (!isolated_vertices(phi.graph()).empty()) {
      report.skip(describe(phi) + ": has isolated vertices");
      continue;
    }
    ++report.instances;
    if (!is_tight(gap_of(phi))) {
      ++report.vacuous;
      continue;
    }
    if (!has_perfect_matching(phi.graph())) {
      report.violate(describe(phi) + ": tight without a perfect matching");
    }
  }
  return report;
}

LemmaReport check_nonbipartite_lemma(std::span<const GainGraph> corpus) {
  LemmaReport report{.lemma = lemma_id::kNonBipartite};
  for (const GainGraph& phi : corpus) {
    if (!is_connected(phi.graph()) || is_bipartite(phi.graph())) {
      report.skip(describe(phi) + ": not connected and non-bipartite");
      continue;
    }
    ++report.instances;
    const double gap = gap_of(phi);
    report.observe_margin(gap);
    if (!(gap > kStrictMargin)) {
      report.violate(describe(phi) + ": non-bipartite graph is tight, gap " + std::to_string(gap));
    }
  }
  return report;
}

LemmaReport check_subgraph_lemma(const GainGraph& phi, std::span<const Vertex> vs) {
  LemmaReport report{.lemma = lemma_id::kTightSubgraph};
  const Graph& g = phi.graph();
  std::vector<bool> inside(g.order(), false);
  for (Vertex v : vs) inside.at(v) = true;
  VertexSet complement;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!inside[v]) complement.push_back(v);
  }
  const GainGraph part = induced_gain_subgraph(phi, vs);
  const std::size_t mu = maximum_matching(g).mu;
  const std::size_t mu_part = maximum_matching(part.graph()).mu;
  const std::size_t mu_rest = maximum_matching(induced_subgraph(g, complement).graph).mu;
  if (mu != mu_part + mu_rest) {
    report.skip(describe(phi) + ": matching number does not split over the vertex set");
    return report;
  }
  ++report.instances;
  if (!is_tight(gap_of(phi))) {
    ++report.vacuous;
    return report;
  }
  const double part_gap = gap_of(part);
  report.observe_margin(kTightTolerance - part_gap);
  if (!is_tight(part_gap)) {
    report.violate(describe(phi) + ": restriction is not tight, gap " + std::to_string(part_gap));
  }
  if (is_p4(part.graph()) || is_c6_tilde(part.graph())) {
    report.violate(describe(phi) + ": tight graph induces P4 or C6-tilde on a splitting set");
  }
  return report;
}

LemmaReport check_balance_lemma(std::span<const GainGraph> corpus) {
  LemmaReport report{.lemma = lemma_id::kBalance};
  for (const GainGraph& phi : corpus) {
    const Graph& g = phi.graph();
    if (g.order() < 2 || !is_connected(g) || !is_bipartite(g)) {
      report.skip(describe(phi) + ": not connected bipartite on >= 2 vertices");
      continue;
    }
    ++report.instances;
    if (!is_tight(gap_of(phi))) {
      ++report.vacuous;
      continue;
    }
    if (!is_balanced(phi).balanced) report.violate(describe(phi) + ": tight but unbalanced");
    if (!is_regular_complete_bipartite(g)) report.violate(describe(phi) + ": tight but not K_{t,t}");
  }
  return report;
}

std::size_t c6tilde_trials(std::size_t trials) { return trials * 5 / 2; }

namespace {

VertexSet random_subset(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  VertexSet vs;
  for (Vertex v = 0; v < n; ++v) {
    if (coin(rng)) vs.push_back(v);
  }
  return vs;
}

// Random extremal union on at most nmax vertices, randomly switched. The
// vertex sets of its matched pairs {x_i, y_i} are returned alongside.
struct ExtremalInstance {
  GainGraph phi;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

ExtremalInstance random_extremal(std::size_t nmax, std::mt19937_64& rng) {
  std::vector<std::size_t> sizes;
  std::size_t used = 0;
  while (used + 2 <= nmax) {
    const std::size_t room = (nmax - used) / 2;
    const std::size_t t = std::uniform_int_distribution<std::size_t>(1, room)(rng);
    sizes.push_back(t);
    used += 2 * t;
    if (std::bernoulli_distribution(0.5)(rng)) break;
  }
  const std::size_t isolated =
      std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(3, nmax - used))(rng);
  ExtremalInstance inst{extremal_union(sizes, isolated), {}};
  Vertex offset = 0;
  for (std::size_t t : sizes) {
    for (std::size_t i = 0; i < t; ++i) inst.pairs.emplace_back(offset + i, offset + t + i);
    offset += 2 * t;
  }
  inst.phi = switch_gains(inst.phi, random_switching(inst.phi.order(), rng()));
  return inst;
}

std::vector<GainGraph> component_pieces(const GainGraph& phi) {
  std::vector<GainGraph> out;
  for (const VertexSet& comp : components(phi.graph())) {
    out.push_back(induced_gain_subgraph(phi, comp));
  }
  return out;
}

GainGraph strip_isolated(const GainGraph& phi) {
  VertexSet keep;
  for (Vertex v = 0; v < phi.order(); ++v) {
    if (phi.graph().degree(v) > 0) keep.push_back(v);
  }
  return induced_gain_subgraph(phi, keep);
}

}  // namespace

std::vector<LemmaReport> run_lemma_suite(const SuiteOptions& options) {
  const std::uint64_t seed = options.seed;
  const std::size_t trials = options.trials;
  const std::size_t nmax = std::max<std::size_t>(options.nmax, 2);

  const std::vector<GainGraph> random = random_corpus(seed, trials, 2, nmax);
  std::vector<ExtremalInstance> extremal;
  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(derive_seed(seed, 2, i));
    extremal.push_back(random_extremal(nmax, rng));
  }
  std::vector<GainGraph> perturbed;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t t = 1 + i % (nmax / 2);
    perturbed.push_back(rotated_ktt(t, std::numbers::pi / 4));
  }

  std::vector<GainGraph> everything = random;
  for (const auto& inst : extremal) everything.push_back(inst.phi);
  everything.insert(everything.end(), perturbed.begin(), perturbed.end());

  std::vector<LemmaReport> reports;
  reports.push_back(check_energy_bound(everything));

  {
    LemmaReport cut{.lemma = lemma_id::kEdgeCut};
    std::size_t index = 0;
    for (const GainGraph& phi : everything) {
      std::mt19937_64 rng(derive_seed(seed, 4, index++));
      VertexSet vs = random_subset(phi.order(), rng);
      if (!edge_cut(phi.graph(), vs).empty()) cut.merge(check_edge_cut_lemma(phi, vs));
      // A single-vertex cut is always a star.
      std::vector<Vertex> hubs;
      for (Vertex v = 0; v < phi.order(); ++v) {
        if (phi.graph().degree(v) > 0) hubs.push_back(v);
      }
      if (!hubs.empty()) {
        const Vertex v = hubs[std::uniform_int_distribution<std::size_t>(0, hubs.size() - 1)(rng)];
        cut.merge(check_edge_cut_lemma(phi, std::vector<Vertex>{v}));
      }
    }
    reports.push_back(cut);
  }

  {
    LemmaReport pendant{.lemma = lemma_id::kPendant};
    if (nmax >= 3) {
      for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t n = 3 + i % (nmax - 2);
        pendant.merge(check_pendant_lemma(random_gain_tree(n, derive_seed(seed, 5, i))));
      }
    }
    for (const GainGraph& phi : random) {
      for (const GainGraph& piece : component_pieces(phi)) {
        if (piece.order() >= 3 && !pendant_vertices(piece.graph()).empty()) {
          pendant.merge(check_pendant_lemma(piece));
        }
      }
    }
    reports.push_back(pendant);
  }

  if (c6tilde_trials(trials) > 0) {
    reports.push_back(check_c6tilde_lemma(seed, c6tilde_trials(trials)));
  } else {
    reports.push_back(LemmaReport{.lemma = lemma_id::kC6Tilde});
  }

  {
    std::vector<GainGraph> stripped;
    for (const GainGraph& phi : everything) stripped.push_back(strip_isolated(phi));
    reports.push_back(check_perfect_matching_lemma(stripped));
  }

  {
    std::vector<GainGraph> odd;
    for (const GainGraph& phi : random) {
      for (GainGraph& piece : component_pieces(phi)) {
        if (!is_bipartite(piece.graph())) odd.push_back(std::move(piece));
      }
    }
    if (nmax >= 3) {
      const std::size_t odd_lengths = (nmax - 1) / 2;
      for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t n = 3 + 2 * (i % odd_lengths);
        odd.push_back(random_gain_graph(named::cycle(n), derive_seed(seed, 6, i)));
      }
    }
    reports.push_back(check_nonbipartite_lemma(odd));
  }

  {
    LemmaReport sub{.lemma = lemma_id::kTightSubgraph};
    for (std::size_t i = 0; i < extremal.size(); ++i) {
      std::mt19937_64 rng(derive_seed(seed, 7, i));
      VertexSet vs;
      std::bernoulli_distribution coin(0.5);
      for (auto [x, y] : extremal[i].pairs) {
        if (coin(rng)) {
          vs.push_back(x);
          vs.push_back(y);
        }
      }
      sub.merge(check_subgraph_lemma(extremal[i].phi, vs));
    }
    for (std::size_t i = 0; i < random.size(); ++i) {
      std::mt19937_64 rng(derive_seed(seed, 8, i));
      std::bernoulli_distribution coin(0.5);
      VertexSet vs;
      for (const VertexSet& comp : components(random[i].graph())) {
        if (coin(rng)) vs.insert(vs.end(), comp.begin(), comp.end());
      }
      sub.merge(check_subgraph_lemma(random[i], vs));
    }
    reports.push_back(sub);
  }

  {
    std::vector<GainGraph> pieces;
    for (const GainGraph& phi : everything) {
      for (GainGraph& piece : component_pieces(phi)) {
        if (piece.order() >= 2 && is_bipartite(piece.graph())) pieces.push_back(std::move(piece));
      }
    }
    reports.push_back(check_balance_lemma(pieces));
  }

  return reports;
}

}  // namespace gainspec
