#include "gainspec/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gainspec/corpus.hpp"
#include "gainspec/io.hpp"
#include "gainspec/spectral.hpp"
#include "gainspec/theorem_check.hpp"

namespace gainspec::cli {

namespace {

struct Options {
  std::string format = "json";
  std::optional<unsigned long long> seed;

  std::string analyze_path;

  std::size_t trials = 200;
  std::size_t nmax = 10;

  std::string kind;
  std::vector<std::string> params;
  std::string out_path;
  bool switched = false;
  bool random_gains = false;
  std::size_t isolated = 0;

  std::string double_path;
};

unsigned long long resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("GAINSPEC_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("GAINSPEC_SEED", "not an unsigned integer: " + std::string(env));
  }
  return kDefaultSeed;
}

void emit(const nlohmann::json& doc, const Options& o, std::ostream& out) {
  if (o.format == "text") {
    out << to_text(doc);
  } else {
    out << doc.dump(2) << '\n';
  }
}

std::size_t param_size(const std::vector<std::string>& params, std::size_t i, const char* name) {
  if (i >= params.size()) throw CLI::ValidationError(name, "missing parameter");
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(params[i], &used);
    if (used == params[i].size()) return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(name, "expected a non-negative integer, got '" + params[i] + "'");
}

double param_real(const std::vector<std::string>& params, std::size_t i, const char* name) {
  if (i >= params.size()) throw CLI::ValidationError(name, "missing parameter");
  try {
    std::size_t used = 0;
    const double value = std::stod(params[i], &used);
    if (used == params[i].size()) return value;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(name, "expected a number, got '" + params[i] + "'");
}

std::vector<std::size_t> param_sizes(const std::vector<std::string>& params) {
  if (params.empty()) throw CLI::ValidationError("sizes", "missing comma-separated sizes");
  std::vector<std::size_t> sizes;
  std::string joined;
  for (const auto& p : params) joined += (joined.empty() ? "" : ",") + p;
  std::stringstream ss(joined);
  std::vector<std::string> parts;
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::size_t t = param_size(parts, i, "sizes");
    if (t == 0) throw CLI::ValidationError("sizes", "part sizes must be positive");
    sizes.push_back(t);
  }
  return sizes;
}

void expect_params(const Options& o, std::size_t count) {
  if (o.params.size() != count) {
    throw CLI::ValidationError(o.kind, "expected " + std::to_string(count) + " parameter(s), got " +
                                           std::to_string(o.params.size()));
  }
}

GainGraph build_instance(const Options& o, unsigned long long seed) {
  const std::uint64_t gain_seed = derive_seed(seed, 10, 0);
  const std::uint64_t switch_seed = derive_seed(seed, 11, 0);
  Graph g;
  bool random = o.random_gains;
  if (o.kind == "knn") {
    expect_params(o, 1);
    g = named::complete_bipartite(param_size(o.params, 0, "t"), param_size(o.params, 0, "t"));
  } else if (o.kind == "cycle") {
    expect_params(o, 1);
    const std::size_t n = param_size(o.params, 0, "n");
    if (n < 3) throw CLI::ValidationError("n", "cycles need at least 3 vertices");
    g = named::cycle(n);
  } else if (o.kind == "path") {
    expect_params(o, 1);
    g = named::path(param_size(o.params, 0, "n"));
  } else if (o.kind == "c6tilde") {
    expect_params(o, 0);
    g = named::c6_tilde();
  } else if (o.kind == "gnp") {
    expect_params(o, 2);
    const double p = param_real(o.params, 1, "p");
    if (!(p >= 0.0 && p <= 1.0)) throw CLI::ValidationError("p", "must lie in [0, 1]");
    g = random_gnp(param_size(o.params, 0, "n"), p, derive_seed(seed, 12, 0));
    random = true;
  } else if (o.kind == "extremal-union") {
    const std::vector<std::size_t> sizes = param_sizes(o.params);
    g = extremal_union(sizes, o.isolated).graph();
  } else {
    throw CLI::ValidationError("kind", "unknown kind '" + o.kind +
                                           "' (knn, cycle, path, c6tilde, gnp, extremal-union)");
  }
  if (o.kind != "extremal-union" && o.isolated > 0) g = disjoint_union(g, named::empty(o.isolated));
  GainGraph phi = random ? random_gain_graph(g, gain_seed) : all_ones(g);
  if (o.switched) phi = switch_gains(phi, random_switching(phi.order(), switch_seed));
  return phi;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const GainGraph phi = read_gain_graph(o.analyze_path);
  const BoundReport report = bound_report(phi);
  emit(analysis_json(phi, report), o, out);
  return report.consistent ? kExitOk : kExitCheckFailed;
}

int cmd_lemmas(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions suite{.seed = resolve_seed(o), .trials = o.trials, .nmax = o.nmax};
  const std::vector<LemmaReport> reports = run_lemma_suite(suite);
  nlohmann::json doc;
  doc["seed"] = suite.seed;
  doc["trials"] = suite.trials;
  doc["nmax"] = suite.nmax;
  doc["lemmas"] = nlohmann::json::array();
  bool passed = true;
  for (const LemmaReport& r : reports) {
    doc["lemmas"].push_back(to_json(r));
    passed = passed && r.passed();
    if (r.instances == 0) err << "warning: " << r.lemma << " checked no instances\n";
    if (r.skips > 0) err << "warning: " << r.lemma << " skipped " << r.skips << " instance(s)\n";
  }
  doc["passed"] = passed;
  emit(doc, o, out);
  return passed ? kExitOk : kExitCheckFailed;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const unsigned long long seed = resolve_seed(o);
  const GainGraph phi = build_instance(o, seed);
  std::string comment = "gainspec generate " + o.kind;
  for (const auto& p : o.params) comment += " " + p;
  if (o.isolated > 0) comment += " --isolated " + std::to_string(o.isolated);
  if (o.random_gains) comment += " --random-gains";
  if (o.switched) comment += " --switched";
  comment += " --seed " + std::to_string(seed);
  if (o.out_path.empty()) {
    out << serialize(phi, comment);
  } else {
    write_gain_graph(o.out_path, phi, comment);
  }
  return kExitOk;
}

int cmd_double(const Options& o, std::ostream& out, std::ostream& err) {
  const GainGraph phi = read_gain_graph(o.double_path);
  if (2 * phi.order() > kKroneckerMaxOrder) {
    throw CLI::ValidationError("file", "double would have " + std::to_string(2 * phi.order()) +
                                           " vertices, limit is " +
                                           std::to_string(kKroneckerMaxOrder));
  }
  const GainGraph twice = bipartite_double(phi);
  const KroneckerReport check = kronecker_spectrum_check(phi, named::complete(2));
  nlohmann::json doc;
  doc["n"] = twice.order();
  doc["m"] = twice.size();
  doc["energy"] = check.base_energy;
  doc["double_energy"] = check.product_energy;
  doc["energy_doubles"] = check.energy_doubles;
  doc["max_spectrum_deviation"] = check.max_deviation;
  doc["spectra_match"] = check.spectra_match;
  if (o.out_path.empty()) {
    out << serialize(twice, "bipartite double of " + o.double_path);
    emit(doc, o, err);
  } else {
    write_gain_graph(o.out_path, twice, "bipartite double of " + o.double_path);
    emit(doc, o, out);
  }
  return check.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy, matching number and balance of complex unit gain graphs", "gainspec"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Spectrum, energy, matching, balance and bound");
  analyze->add_option("file", o.analyze_path, "Gain graph file")->required();
  analyze->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* lemmas = app.add_subcommand("lemmas", "Run every lemma sweep on seeded corpora");
  lemmas->add_option("--seed", o.seed, "Base seed (default $GAINSPEC_SEED or 42)");
  lemmas->add_option("--trials", o.trials, "Instances per sweep")->capture_default_str();
  lemmas->add_option("--nmax", o.nmax, "Largest random graph order")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  lemmas->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* generate = app.add_subcommand("generate", "Write a gain graph file");
  generate->add_option("kind", o.kind, "knn, cycle, path, c6tilde, gnp, extremal-union")
      ->required();
  generate->add_option("params", o.params, "Kind parameters");
  generate->add_option("--seed", o.seed, "Seed (default $GAINSPEC_SEED or 42)");
  generate->add_option("--out", o.out_path, "Output file (default stdout)");
  generate->add_option("--isolated", o.isolated, "Append isolated vertices");
  generate->add_flag("--switched", o.switched, "Apply a random switching");
  generate->add_flag("--random-gains", o.random_gains, "Uniform random gains instead of ones");

  auto* twice = app.add_subcommand("double", "Bipartite double and energy doubling check");
  twice->add_option("file", o.double_path, "Gain graph file")->required();
  twice->add_option("--out", o.out_path, "Output file (default stdout, report to stderr)");
  twice->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (lemmas->parsed()) return cmd_lemmas(o, out, err);
    if (generate->parsed()) return cmd_generate(o, out);
    if (twice->parsed()) return cmd_double(o, out, err);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gainspec::cli
