#include "gainspec/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace gainspec {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + tok + "'");
  }
  return value;
}

double parse_angle(const std::string& tok, std::size_t line) {
  char* end = nullptr;
  const double value = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || !std::isfinite(value)) {
    throw ParseError(line, "invalid angle '" + tok + "'");
  }
  return value;
}

std::string format_angle(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

nlohmann::json complex_json(UnitComplex z) { return nlohmann::json::array({z.re(), z.im()}); }

void flatten(const nlohmann::json& node, const std::string& prefix, std::ostringstream& os) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (node.is_array() && !node.empty() && node.front().is_object()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], prefix + "." + std::to_string(i), os);
    }
  } else {
    os << prefix << ": " << node.dump() << '\n';
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

GainGraph parse_gain_graph(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<UnitComplex> gains;
  std::vector<std::size_t> edge_lines;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "ugg") {
        throw ParseError(lineno, "expected header 'ugg <n>'");
      }
      n = parse_index(tokens[1], lineno, "vertex count");
      continue;
    }
    if (tokens.size() != 3) throw ParseError(lineno, "expected 'u v theta'");
    const std::size_t u = parse_index(tokens[0], lineno, "vertex");
    const std::size_t v = parse_index(tokens[1], lineno, "vertex");
    const double theta = parse_angle(tokens[2], lineno);
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    if (u >= *n || v >= *n) throw ParseError(lineno, "vertex out of range");
    // Store the gain on the orientation from the smaller endpoint.
    const UnitComplex z = UnitComplex::from_angle(theta);
    edges.emplace_back(u, v);
    gains.push_back(u < v ? z : z.inverse());
    edge_lines.push_back(lineno);
  }
  if (!n) throw ParseError(lineno, "missing header 'ugg <n>'");

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      throw ParseError(edge_lines[order[i]], "duplicate edge");
    }
  }
  std::vector<Edge> sorted_edges;
  std::vector<UnitComplex> forward;
  for (std::size_t i : order) {
    sorted_edges.push_back(edges[i]);
    forward.push_back(gains[i]);
  }
  return GainGraph(Graph(*n, sorted_edges), std::move(forward));
}

GainGraph parse_gain_graph(const std::string& text) {
  std::istringstream is(text);
  return parse_gain_graph(is);
}

GainGraph read_gain_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_gain_graph(in);
}

std::string serialize(const GainGraph& phi, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << '\n';
  os << "ugg " << phi.order() << '\n';
  const auto& edges = phi.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << edges[i].u << ' ' << edges[i].v << ' ' << format_angle(phi.forward_gains()[i].angle())
       << '\n';
  }
  return os.str();
}

void write_gain_graph(const std::filesystem::path& path, const GainGraph& phi,
                      const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(phi, comment);
}

nlohmann::json to_json(const BalanceCertificate& cert) {
  nlohmann::json j;
  j["balanced"] = cert.balanced;
  if (cert.switching) {
    nlohmann::json zeta = nlohmann::json::array();
    for (UnitComplex z : *cert.switching) zeta.push_back(complex_json(z));
    j["switching"] = zeta;
  } else {
    j["violating_cycle"] = {{"vertices", cert.cycle},
                            {"gain", complex_json(cert.cycle_gain)},
                            {"gain_angle", cert.cycle_gain.angle()}};
  }
  return j;
}

nlohmann::json analysis_json(const GainGraph& phi, const BoundReport& report) {
  nlohmann::json j;
  j["n"] = phi.order();
  j["m"] = phi.size();
  j["components"] = components(phi.graph());
  j["eigenvalues"] = report.spectrum.eigenvalues;
  j["energy"] = report.energy;
  j["mu"] = report.mu;
  j["gap"] = report.gap;
  j["numerically_tight"] = report.numerically_tight;
  j["balanced"] = report.balance.balanced;
  j["balance"] = to_json(report.balance);
  j["structurally_extremal"] = report.structurally_extremal;
  j["consistent"] = report.consistent;
  return j;
}

nlohmann::json to_json(const LemmaReport& report) {
  nlohmann::json j;
  j["lemma"] = report.lemma;
  j["instances"] = report.instances;
  j["vacuous"] = report.vacuous;
  j["skips"] = report.skips;
  j["skip_notes"] = report.skip_notes;
  j["violations"] = report.violations;
  j["worst_margin"] = report.worst_margin ? nlohmann::json(*report.worst_margin) : nlohmann::json();
  j["passed"] = report.passed();
  return j;
}

std::string to_text(const nlohmann::json& doc) {
  std::ostringstream os;
  flatten(doc, "", os);
  return os.str();
}

}  // namespace gainspec
