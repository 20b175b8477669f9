#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "regionkit/errors.hpp"
#include "regionkit/graph.hpp"
#include "regionkit/harness.hpp"

using namespace regionkit;

namespace {

Region R(std::vector<Vertex> v) { return Region{std::move(v)}; }

RegionFamily spoke_pairs() {
  RegionFamily f;
  for (Vertex i = 0; i < 5; ++i) f.regions.push_back(R({i, i + 5}));
  return f;
}

}  // namespace

TEST(Graph, NormalizesAndRejects) {
  const std::vector<Edge> e{{1, 0}, {0, 1}, {2, 1}};
  const Graph g(3, e);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(2, loop), InputError);
  const std::vector<Edge> far{{0, 3}};
  EXPECT_THROW(Graph(3, far), InputError);
}

TEST(Graph, Petersen) {
  const Graph p = petersen_graph();
  EXPECT_EQ(p.vertex_count(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
  // frozen from networkx.petersen_graph()
  const std::vector<Edge> expected{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                   {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  EXPECT_EQ(p, Graph(10, expected));
}

TEST(ConnectedSubset, Examples) {
  const Graph p3 = path_graph(3);
  const std::vector<Vertex> ends{0, 2}, all{0, 1, 2};
  EXPECT_FALSE(is_connected_subset(p3, ends));
  EXPECT_TRUE(is_connected_subset(p3, all));
  EXPECT_FALSE(is_connected_subset(p3, {}));
  const Graph pet = petersen_graph();
  for (Vertex v = 0; v < 10; ++v) {
    const std::vector<Vertex> s{v};
    EXPECT_TRUE(is_connected_subset(pet, s));
  }
  const std::vector<Vertex> bad{7};
  EXPECT_THROW(is_connected_subset(p3, bad), InputError);
}

TEST(RegionsAdjacent, Examples) {
  EXPECT_TRUE(regions_adjacent(path_graph(4), R({0, 1}), R({2, 3})));
  EXPECT_FALSE(regions_adjacent(path_graph(5), R({0}), R({3, 4})));
  const Graph p = petersen_graph();
  for (Vertex i = 0; i < 5; ++i) EXPECT_TRUE(regions_adjacent(p, R({i}), R({i + 5})));
}

TEST(RegionsAdjacent, ExistentialNotUniversal) {
  // only 1-2 crosses; the universal reading would need 0-3 as well
  EXPECT_TRUE(regions_adjacent(path_graph(4), R({0, 1}), R({2, 3})));
  EXPECT_FALSE(path_graph(4).adjacent(0, 3));
}

TEST(CompleteFamily, Examples) {
  const Graph p = petersen_graph();
  EXPECT_TRUE(is_complete_region_family(p, spoke_pairs()));
  RegionFamily one;
  one.regions.push_back(R({3}));
  EXPECT_TRUE(is_complete_region_family(p, one));
  RegionFamily c4;
  for (Vertex i = 0; i < 4; ++i) c4.regions.push_back(R({i}));
  EXPECT_FALSE(is_complete_region_family(cycle_graph(4), c4));
}

TEST(CompleteFamily, RejectsOverlapAndDisconnected) {
  RegionFamily overlap;
  overlap.regions = {R({0, 1}), R({1, 2})};
  EXPECT_THROW(validate_family(path_graph(3), overlap), InputError);
  RegionFamily split;
  split.regions = {R({0, 2}), R({1})};
  EXPECT_THROW(validate_family(path_graph(3), split), InputError);
}

TEST(Contract, Examples) {
  EXPECT_EQ(contract_family(petersen_graph(), spoke_pairs()), complete_graph(5));
  RegionFamily halves;
  halves.regions = {R({0, 1}), R({2, 3})};
  EXPECT_EQ(contract_family(path_graph(4), halves), complete_graph(2));
  const Graph pet = petersen_graph();
  RegionFamily singles;
  for (Vertex v = 0; v < 10; ++v) singles.regions.push_back(R({v}));
  EXPECT_EQ(contract_family(pet, singles), pet);
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient_by_coloring(complete_graph(4), Coloring({0, 1, 2, 3})), complete_graph(4));
  EXPECT_EQ(quotient_by_coloring(cycle_graph(4), Coloring({0, 1, 0, 1})), complete_graph(2));
  const Coloring c({0, 1, 0, 1, 2, 1, 0, 2, 2, 1});
  const Graph pet = petersen_graph();
  ASSERT_TRUE(is_proper(pet, c));
  // color classes {0,2,6}, {1,3,5,9}, {4,7,8}; 0-1, 0-4 and 1-4 all occur
  EXPECT_EQ(quotient_by_coloring(pet, c), complete_graph(3));
}

TEST(Proper, Examples) {
  EXPECT_TRUE(is_proper(complete_graph(3), Coloring({0, 1, 2})));
  EXPECT_FALSE(is_proper(complete_graph(3), Coloring({0, 1, 1})));
  EXPECT_THROW(is_proper(complete_graph(3), Coloring({0, 1})), InputError);
}

TEST(Coloring, PaletteMustBeDense) {
  EXPECT_EQ(Coloring({0, 2, 1}).palette_size(), 3u);
  EXPECT_THROW(Coloring({0, 2}), InputError);
}

TEST(GraphProperties, RegionAdjacencySymmetric) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = random_graph(7, 0.4, s);
    Xorshift64Star rng(s);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < 7; ++v) {
      const auto r = rng.below(3);
      if (r == 0) a.push_back(v);
      if (r == 1) b.push_back(v);
    }
    if (!is_connected_subset(g, a) || !is_connected_subset(g, b)) continue;
    EXPECT_EQ(regions_adjacent(g, R(a), R(b)), regions_adjacent(g, R(b), R(a)));
  }
}

TEST(GraphProperties, QuotientOfProperColoringIsSmall) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = random_graph(8, 0.35, s + 100);
    // greedy coloring in index order is proper by construction
    std::vector<std::size_t> col(8, 0);
    for (Vertex v = 0; v < 8; ++v) {
      std::vector<bool> used(9, false);
      for (Vertex u : g.neighbors(v)) {
        if (u < v) used[col[u]] = true;
      }
      while (used[col[v]]) ++col[v];
    }
    std::vector<std::size_t> dense(col);
    std::vector<std::size_t> remap(9, SIZE_MAX);
    std::size_t next = 0;
    for (auto& c : dense) {
      if (remap[c] == SIZE_MAX) remap[c] = next++;
      c = remap[c];
    }
    const Coloring c(dense);
    ASSERT_TRUE(is_proper(g, c));
    const Graph q = quotient_by_coloring(g, c);
    EXPECT_EQ(q.vertex_count(), c.palette_size());
    EXPECT_LE(q.edge_count(), c.palette_size() * (c.palette_size() - 1) / 2);
  }
}
