#include "gainspec/io.hpp"

#include <filesystem>
#include <numbers>

#include <gtest/gtest.h>

#include "gainspec/corpus.hpp"

namespace gainspec {
namespace {

void expect_same(const GainGraph& a, const GainGraph& b, double tol) {
  ASSERT_EQ(a.graph(), b.graph());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_LE(distance(a.forward_gains()[i], b.forward_gains()[i]), tol);
  }
}

std::size_t error_line(const std::string& text) {
  try {
    parse_gain_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return 0;
}

TEST(Parse, Basic) {
  const GainGraph phi = parse_gain_graph("# a triangle\nugg 3\n0 1 0\n1 2 1.5707963267948966\n\n2 0 0\n");
  EXPECT_EQ(phi.graph(), named::cycle(3));
  EXPECT_NEAR(phi.gain(1, 2).im(), 1.0, 1e-15);
  EXPECT_NEAR(phi.gain(2, 1).im(), -1.0, 1e-15);
}

TEST(Parse, ReversedOrientationConjugates) {
  const GainGraph a = parse_gain_graph("ugg 2\n1 0 0.75\n");
  EXPECT_NEAR(a.gain(0, 1).angle(), -0.75, 1e-15);
  EXPECT_NEAR(a.gain(1, 0).angle(), 0.75, 1e-15);
}

TEST(Parse, EmptyGraphs) {
  EXPECT_EQ(parse_gain_graph("ugg 0\n").order(), 0u);
  EXPECT_EQ(parse_gain_graph("ugg 4\n").size(), 0u);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("ugg 3\n0 0 1\n"), 2u);
  EXPECT_EQ(error_line("ugg 3\n0 1 0\n\n1 0 0\n"), 4u);
  EXPECT_EQ(error_line("ugg 3\n0 3 0\n"), 2u);
  EXPECT_EQ(error_line("# c\nugg x\n"), 2u);
  EXPECT_EQ(error_line("0 1 0\n"), 1u);
  EXPECT_EQ(error_line("ugg 3\n0 1\n"), 2u);
  EXPECT_EQ(error_line("ugg 3\n0 1 nan\n"), 2u);
  EXPECT_EQ(error_line("ugg 3\n0 -1 0\n"), 2u);
  EXPECT_EQ(error_line("ugg 2\n0 1 0.5x\n"), 2u);
  EXPECT_THROW(parse_gain_graph(""), ParseError);
  try {
    parse_gain_graph("ugg 3\n0 0 1\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 2: ", 0), 0u);
  }
}

TEST(Serialize, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const GainGraph phi = random_gain_graph(random_gnp(1 + seed % 12, 0.5, seed), seed + 100);
    expect_same(parse_gain_graph(serialize(phi, "fixture")), phi, 1e-12);
  }
  const std::vector<std::size_t> sizes{2, 3};
  const GainGraph u = switch_gains(extremal_union(sizes, 2), random_switching(12, 5));
  expect_same(parse_gain_graph(serialize(u)), u, 1e-12);
  expect_same(parse_gain_graph(serialize(rotated_ktt(3, std::numbers::pi))),
              rotated_ktt(3, std::numbers::pi), 1e-12);
}

TEST(Serialize, Files) {
  const auto path = std::filesystem::temp_directory_path() / "gainspec_io_test.ugg";
  const GainGraph phi = random_gain_graph(named::petersen(), 3);
  write_gain_graph(path, phi, "petersen");
  expect_same(read_gain_graph(path), phi, 1e-12);
  std::filesystem::remove(path);
  EXPECT_THROW(read_gain_graph(path), ParseError);
}

TEST(Json, AnalysisDocument) {
  const GainGraph phi = all_ones(named::complete_bipartite(2, 2));
  const nlohmann::json doc = analysis_json(phi, bound_report(phi));
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["m"], 4);
  EXPECT_EQ(doc["mu"], 2);
  EXPECT_NEAR(doc["energy"].get<double>(), 4.0, 1e-12);
  EXPECT_TRUE(doc["numerically_tight"].get<bool>());
  EXPECT_TRUE(doc["consistent"].get<bool>());
  EXPECT_TRUE(doc["balanced"].get<bool>());
  EXPECT_EQ(doc["eigenvalues"].size(), 4u);

  const GainGraph bad = rotated_ktt(2, 1.0);
  const nlohmann::json cert = to_json(is_balanced(bad));
  EXPECT_FALSE(cert["balanced"].get<bool>());
  EXPECT_EQ(cert["violating_cycle"]["vertices"].size(), 4u);
}

TEST(Json, TextRendering) {
  nlohmann::json doc;
  doc["a"] = 1;
  doc["b"]["c"] = true;
  doc["d"] = nlohmann::json::array({1, 2});
  EXPECT_EQ(to_text(doc), "a: 1\nb.c: true\nd: [1,2]\n");
}

}  // namespace
}  // namespace gainspec
