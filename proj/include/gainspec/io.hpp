#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gainspec/gain_graph.hpp"
#include "gainspec/theorem_check.hpp"

namespace gainspec {

/// Malformed gain-graph file; `line()` is 1-based (0 when not line specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text format:
///
///     # comment
///     ugg <n>
///     <u> <v> <theta>
///
/// one line per edge with gain(u,v) = e^{i theta}. Angles are written with
/// 17 significant digits so a round trip reproduces every gain.
GainGraph parse_gain_graph(std::istream& in);
GainGraph parse_gain_graph(const std::string& text);
GainGraph read_gain_graph(const std::filesystem::path& path);

std::string serialize(const GainGraph& phi, const std::string& comment = {});
void write_gain_graph(const std::filesystem::path& path, const GainGraph& phi,
                      const std::string& comment = {});

nlohmann::json to_json(const BalanceCertificate& cert);
/// Full analysis report: n, m, components, eigenvalues, energy, mu, gap,
/// flags, and the balance certificate.
nlohmann::json analysis_json(const GainGraph& phi, const BoundReport& report);
nlohmann::json to_json(const LemmaReport& report);

/// Renders a JSON object as "key: value" lines, nested keys joined by '.'.
std::string to_text(const nlohmann::json& doc);

}  // namespace gainspec
