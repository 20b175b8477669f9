#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "regionkit/errors.hpp"
#include "regionkit/harness.hpp"
#include "regionkit/io.hpp"
#include "regionkit/oracles.hpp"
#include "regionkit/solvers.hpp"

using namespace regionkit;

namespace {

Graph k5_minus_edge() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    for (Vertex j = i + 1; j < 5; ++j) {
      if (!(i == 0 && j == 1)) e.push_back({i, j});
    }
  }
  return Graph(5, e);
}

Graph star_tree() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}};
  return Graph(6, e);
}

void expect_certified(const Graph& g) {
  const auto chi = chromatic_number(g);
  EXPECT_TRUE(is_proper(g, chi.certificate));
  EXPECT_EQ(chi.certificate.palette_size(), chi.value);
  const auto h = complete_number(g);
  EXPECT_EQ(h.certificate.size(), h.value);
  EXPECT_TRUE(is_complete_region_family(g, h.certificate));
  EXPECT_EQ(contract_family(g, h.certificate), complete_graph(h.value));
}

}  // namespace

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(complete_graph(5)).value, 5u);
  EXPECT_EQ(chromatic_number(petersen_graph()).value, 3u);
  EXPECT_EQ(chromatic_number(star_tree()).value, 2u);
  EXPECT_EQ(chromatic_number(Graph(0)).value, 0u);
  EXPECT_EQ(chromatic_number(Graph(3)).value, 1u);
  EXPECT_FALSE(testoracle::k_colorable(petersen_graph(), 2));
  EXPECT_TRUE(testoracle::k_colorable(petersen_graph(), 3));
}

TEST(ChromaticOracle, Examples) {
  EXPECT_EQ(chromatic_oracle(Graph(1)), 1u);
  EXPECT_EQ(chromatic_oracle(cycle_graph(5)), 3u);
  EXPECT_EQ(chromatic_oracle(complete_bipartite_graph(3, 3)), 2u);
  EXPECT_THROW(chromatic_oracle(Graph(11)), CapacityError);
}

TEST(FindFamily, Petersen) {
  const Graph p = petersen_graph();
  const auto five = find_complete_family(p, 5);
  ASSERT_TRUE(five.has_value());
  EXPECT_TRUE(is_complete_region_family(p, *five));
  EXPECT_EQ(contract_family(p, *five), complete_graph(5));
  ASSERT_TRUE(testoracle::edge_count_excludes(p, 6));
  EXPECT_FALSE(find_complete_family(p, 6).has_value());
}

TEST(FindFamily, Trivial) {
  const auto one = find_complete_family(Graph(4), 1);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->size(), 1u);
  EXPECT_FALSE(find_complete_family(Graph(4), 2).has_value());
  EXPECT_FALSE(find_complete_family(Graph(0), 1).has_value());
}

TEST(CompleteNumber, Examples) {
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(complete_number(complete_graph(n)).value, n);
  EXPECT_EQ(complete_number(petersen_graph()).value, 5u);
  EXPECT_EQ(complete_number(star_tree()).value, 2u);
  EXPECT_EQ(complete_number(path_graph(9)).value, 2u);
  EXPECT_EQ(complete_number(cycle_graph(4)).value, 3u);
  EXPECT_EQ(complete_number(k5_minus_edge()).value, 4u);
  EXPECT_EQ(complete_number(complete_bipartite_graph(3, 3)).value, 4u);
}

TEST(CompleteNumberOracle, Examples) {
  EXPECT_EQ(complete_number_oracle(cycle_graph(4)), 3u);
  EXPECT_EQ(complete_number_oracle(k5_minus_edge()), 4u);
  EXPECT_EQ(complete_number_oracle(Graph(1)), 1u);
  EXPECT_EQ(complete_number_oracle(petersen_graph(), 10), 5u);
}

TEST(Hadwiger, Examples) {
  const auto p = hadwiger_check(petersen_graph());
  EXPECT_EQ(p.chi, 3u);
  EXPECT_EQ(p.h, 5u);
  EXPECT_TRUE(p.holds);
  const auto k4 = hadwiger_check(complete_graph(4));
  EXPECT_EQ(k4.chi, 4u);
  EXPECT_EQ(k4.h, 4u);
  const auto c5 = hadwiger_check(cycle_graph(5));
  EXPECT_EQ(c5.chi, 3u);
  EXPECT_EQ(c5.h, 3u);
}

TEST(Solvers, DisconnectedTakesMaximum) {
  // K4 plus a disjoint C5
  const Graph k4 = complete_graph(4);
  std::vector<Edge> e(k4.edges().begin(), k4.edges().end());
  for (Vertex i = 0; i < 5; ++i) e.push_back({4 + i, 4 + (i + 1) % 5});
  const Graph g(9, e);
  EXPECT_EQ(chromatic_number(g).value, 4u);
  EXPECT_EQ(complete_number(g).value, 4u);
  expect_certified(g);
}

TEST(Solvers, CapacityGuard) {
  SolverLimits small;
  small.max_component_vertices = 5;
  EXPECT_THROW(complete_number(path_graph(6), small), CapacityError);
  EXPECT_NO_THROW(complete_number(path_graph(5), small));
}

TEST(Solvers, AgreeWithBruteForceOnSmallGraphs) {
  for (const Graph& g : all_graphs_upto(6)) {
    SCOPED_TRACE(to_graph6(g));
    EXPECT_EQ(chromatic_number(g).value, testoracle::brute_chromatic(g));
    EXPECT_EQ(complete_number(g).value, testoracle::brute_complete_number(g));
  }
}

TEST(Solvers, AgreeWithOraclesOnRandom8to9) {
  Xorshift64Star rng(2024);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 8 + rng.below(2);
    const Graph g = random_graph(n, 0.15 + 0.7 * rng.uniform(), rng.next());
    SCOPED_TRACE(to_graph6(g));
    EXPECT_EQ(chromatic_number(g).value, chromatic_oracle(g));
    EXPECT_EQ(complete_number(g).value, complete_number_oracle(g));
  }
}

TEST(SolverProperties, CertificatesAreSound) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Graph g = random_graph(3 + s % 12, 0.1 + 0.8 * ((s * 37) % 100) / 100.0, s);
    expect_certified(g);
  }
}

TEST(SolverProperties, MonotoneUnderEdgeAddition) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const Graph g = random_graph(9, 0.4, 500 + s);
    const auto chi = chromatic_number(g).value;
    const auto h = complete_number(g).value;
    Xorshift64Star rng(s);
    const Vertex a = rng.below(9);
    const Vertex b = (a + 1 + rng.below(8)) % 9;
    std::vector<Edge> e(g.edges().begin(), g.edges().end());
    e.push_back({a, b});
    const Graph g2(9, e);
    EXPECT_GE(chromatic_number(g2).value, chi);
    EXPECT_GE(complete_number(g2).value, h);
  }
}

TEST(SolverProperties, AtLeastCliqueNumber) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph g = random_graph(11, 0.5, 900 + s);
    const auto w = clique_number(g);
    EXPECT_GE(complete_number(g).value, w);
    EXPECT_GE(chromatic_number(g).value, w);
  }
}
