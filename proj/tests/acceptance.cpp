// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "gainspec/corpus.hpp"
#include "gainspec/matching.hpp"
#include "gainspec/spectral.hpp"
#include "gainspec/theorem_check.hpp"
#include "oracles.hpp"

using namespace gainspec;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<GainGraph> criterion1_corpus() { return random_corpus(kSeed, 1000, 1, 10); }

Outcome bound_universality() {
  std::size_t violations = 0;
  double worst = INFINITY;
  for (const GainGraph& phi : criterion1_corpus()) {
    const double gap = bound_report(phi).gap;
    worst = std::min(worst, gap);
    if (gap < -1e-6) ++violations;
  }
  std::ostringstream os;
  os << "1000 graphs, min gap " << worst << ", violations " << violations;
  return {violations == 0, os.str()};
}

Outcome sufficiency_exactness() {
  std::size_t instances = 0, failures = 0;
  double worst = 0.0;
  for (std::size_t total = 1; total <= 6; ++total) {
    for (const auto& sizes : partitions(total)) {
      for (std::size_t isolated = 0; isolated <= 3; ++isolated) {
        const GainGraph base = extremal_union(sizes, isolated);
        for (std::uint64_t k = 0; k < 20; ++k) {
          const GainGraph phi = switch_gains(
              base, random_switching(base.order(), derive_seed(kSeed, 20, instances)));
          ++instances;
          const BoundReport r = bound_report(phi);
          const double dev = std::abs(r.energy - 2.0 * static_cast<double>(r.mu));
          worst = std::max(worst, dev);
          if (dev > 1e-8 || !r.structurally_extremal) ++failures;
        }
      }
    }
  }
  std::ostringstream os;
  os << instances << " switched unions, max |E-2mu| " << worst << ", failures " << failures;
  return {failures == 0 && instances > 0, os.str()};
}

Outcome biconditional() {
  std::vector<GainGraph> corpus = criterion1_corpus();
  const std::size_t structured_begin = corpus.size();
  for (std::size_t i = 0; i < 200; ++i) {
    const std::uint64_t s = derive_seed(kSeed, 21, i);
    switch (i % 5) {
      case 0: corpus.push_back(rotated_ktt(1 + (i / 5) % 6, std::numbers::pi / 4)); break;
      case 1: corpus.push_back(random_gain_graph(named::cycle(6), s)); break;
      case 2: corpus.push_back(i % 10 == 2 ? all_ones(named::c6_tilde())
                                           : random_gain_graph(named::c6_tilde(), s)); break;
      case 3: corpus.push_back(random_gain_graph(named::path(4), s)); break;
      default: corpus.push_back(random_gain_graph(named::cycle(3 + 2 * ((i / 5) % 4)), s)); break;
    }
  }
  // Balanced C6 via switching must be non-tight too.
  corpus.push_back(switch_gains(all_ones(named::cycle(6)), random_switching(6, 5)));
  std::size_t bad = 0, tight = 0;
  for (const GainGraph& phi : corpus) {
    const BoundReport r = bound_report(phi);
    tight += r.numerically_tight;
    if (r.numerically_tight != r.structurally_extremal) ++bad;
  }
  std::ostringstream os;
  os << corpus.size() << " instances (" << corpus.size() - structured_begin
     << " structured), tight " << tight << ", inconsistencies " << bad;
  return {bad == 0, os.str()};
}

Outcome four_cycle_closed_form() {
  std::size_t bad = 0, equal_cases = 0;
  double min_energy = INFINITY, worst_coeff = 0.0, worst_energy = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    const SwitchingFunction draw = random_switching(2, derive_seed(kSeed, 22, i));
    const UnitComplex a = draw[0];
    const UnitComplex b = i % 4 == 0 ? a.inverse() : draw[1];
    const double x = (a * b).re();
    const auto coeffs = char_poly(adjacency(four_cycle(a, b)));
    const std::vector<double> want{1, 0, -4, 0, 2 - 2 * x};
    for (std::size_t k = 0; k < 5; ++k) worst_coeff = std::max(worst_coeff, std::abs(coeffs[k] - want[k]));
    const double closed = four_cycle_energy(a, b);
    worst_energy = std::max(worst_energy, std::abs(closed - energy(four_cycle(a, b))));
    min_energy = std::min(min_energy, closed);
    const bool at_four = std::abs(closed - 4.0) <= 1e-8;
    const bool neutral = std::abs(x - 1.0) <= 1e-9;
    equal_cases += at_four;
    if (at_four != neutral) ++bad;
  }
  const bool pass = worst_coeff <= 1e-8 && worst_energy <= 1e-8 && min_energy >= 4 - 1e-12 && bad == 0;
  std::ostringstream os;
  os << "100 pairs, coeff err " << worst_coeff << ", energy err " << worst_energy << ", min E "
     << min_energy << ", E=4 cases " << equal_cases << ", iff mismatches " << bad;
  return {pass, os.str()};
}

Outcome lemma_sweeps() {
  const std::string cmd = std::string(GAINSPEC_BINARY) +
                          " lemmas --seed 42 --trials 200 --nmax 10 --format text 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {false, "could not start gainspec"};
  std::string output;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) output += buf;
  const int status = pclose(pipe);
  // Every lemma must have non-vacuous instances; skips are reported, not silent.
  std::size_t warned_empty = 0;
  for (std::size_t pos = 0; (pos = output.find("checked no instances", pos)) != std::string::npos; ++pos) {
    ++warned_empty;
  }
  std::ostringstream os;
  os << "exit status " << (WIFEXITED(status) ? WEXITSTATUS(status) : -1) << ", lemmas with no instances "
     << warned_empty;
  const bool pass = WIFEXITED(status) && WEXITSTATUS(status) == 0 && warned_empty == 0;
  if (!pass) os << "\n" << output;
  return {pass, os.str()};
}

Outcome kronecker_identity() {
  std::mt19937_64 rng(derive_seed(kSeed, 23, 0));
  std::size_t bad = 0, doubles = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    const bool is_double = i % 2 == 0 && 2 * n <= 36;
    const std::size_t m =
        is_double ? 2 : std::uniform_int_distribution<std::size_t>(1, 36 / n)(rng);
    const GainGraph phi = random_gain_graph(random_gnp(n, 0.6, rng()), rng());
    const Graph h = is_double ? named::complete(2) : random_gnp(m, 0.6, rng());
    const KroneckerReport r = kronecker_spectrum_check(phi, h);
    worst = std::max(worst, r.max_deviation);
    if (!r.spectra_match) ++bad;
    if (r.is_bipartite_double) {
      ++doubles;
      if (!r.energy_doubles) ++bad;
    }
  }
  std::ostringstream os;
  os << "50 pairs (" << doubles << " doubles), max deviation " << worst << ", failures " << bad;
  return {bad == 0 && doubles > 0, os.str()};
}

Outcome matching_correctness() {
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    std::mt19937_64 rng(derive_seed(kSeed, 24, i));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    const Graph g = random_gnp(n, kCorpusProbabilities[i % 3], rng());
    const std::size_t mu = maximum_matching(g).mu;
    if (mu != oracle::matching_number(g) || mu != matching_oracle(g)) ++mismatches;
  }
  if (maximum_matching(named::petersen()).mu != 5) ++mismatches;
  if (maximum_matching(named::c6_tilde()).mu != 3) ++mismatches;
  for (std::size_t t = 1; t <= 6; ++t) {
    if (maximum_matching(named::complete_bipartite(t, t)).mu != t) ++mismatches;
  }
  std::ostringstream os;
  os << "500 random + 8 fixtures, mismatches " << mismatches;
  return {mismatches == 0, os.str()};
}

Outcome balance_correctness() {
  std::size_t mismatches = 0, balanced = 0, witness_failures = 0;
  for (std::size_t i = 0; i < 300; ++i) {
    std::mt19937_64 rng(derive_seed(kSeed, 25, i));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const Graph g = random_gnp(n, kCorpusProbabilities[i % 3], rng());
    GainGraph phi = all_ones(g);
    switch (i % 4) {
      case 0: phi = random_gain_graph(g, rng()); break;
      case 1: phi = switch_gains(all_ones(g), random_switching(n, rng())); break;
      case 2: phi = oracle::root_of_unity_gains(g, 2, rng()); break;
      default: phi = oracle::root_of_unity_gains(g, 4, rng()); break;
    }
    const BalanceCertificate cert = is_balanced(phi);
    if (cert.balanced != oracle::balanced_by_simple_cycles(phi)) ++mismatches;
    if (cert.balanced) {
      ++balanced;
      const GainGraph flat = switch_gains(phi, *cert.switching);
      for (UnitComplex z : flat.forward_gains()) {
        if (distance(z, UnitComplex()) > 1e-9) {
          ++witness_failures;
          break;
        }
      }
    }
  }
  std::ostringstream os;
  os << "300 graphs (" << balanced << " balanced), verdict mismatches " << mismatches
     << ", witness failures " << witness_failures;
  return {mismatches == 0 && witness_failures == 0, os.str()};
}

Outcome spectral_sanity_check() {
  const SpectralSanity s = spectral_sanity();
  std::ostringstream os;
  os << s.solves << " solves, worst |sum l|/n " << s.worst_trace_ratio << ", worst |sum l^2 - 2m|/n "
     << s.worst_frobenius_ratio;
  return {s.solves > 0 && s.worst_trace_ratio <= 1e-8 && s.worst_frobenius_ratio <= 1e-7, os.str()};
}

}  // namespace

int main() {
  reset_spectral_sanity();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 bound universality", bound_universality},
      {"2 sufficiency exactness", sufficiency_exactness},
      {"3 tight iff extremal", biconditional},
      {"4 four-cycle closed form", four_cycle_closed_form},
      {"5 lemma sweeps", lemma_sweeps},
      {"6 kronecker identity", kronecker_identity},
      {"7 matching correctness", matching_correctness},
      {"8 balance correctness", balance_correctness},
      {"9 spectral sanity", spectral_sanity_check},
  };
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << secs << " s]"
              << std::endl;
    all = all && o.pass;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << total << " s" << std::endl;
  return all ? 0 : 1;
}
