#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "regionkit/constructions.hpp"
#include "regionkit/errors.hpp"
#include "regionkit/harness.hpp"
#include "regionkit/solvers.hpp"
#include "regionkit/voxmap.hpp"

using namespace regionkit;

namespace {

VoxelMap checkerboard() {
  std::vector<Label> cells(36);
  for (std::size_t y = 0; y < 6; ++y) {
    for (std::size_t x = 0; x < 6; ++x) cells[y * 6 + x] = static_cast<Label>((y / 2) * 3 + x / 2);
  }
  return VoxelMap({6, 6}, cells);
}

Coloring checker_colors() {
  std::vector<std::size_t> c(9);
  for (std::size_t r = 0; r < 9; ++r) c[r] = (r % 3 + r / 3) % 2;
  return Coloring(c);
}

// countries of the base layer are the scaled base regions, colored by merged id
void expect_base_round_trip(const VoxelMap& base, const Coloring& coloring, const GeneratingElement& el) {
  const VoxelMap scaled = scale_map(base, el.scale);
  const auto section = testoracle::crop_padded(slice(el.map3d, 2, 0), scaled.extents()[0], scaled.extents()[1]);
  ASSERT_TRUE(section.has_value()) << "base layer has cells outside the scaled footprint";
  const SliceColoring sc = countries(*section);
  EXPECT_TRUE(equal_up_to_relabeling(sc.country_map, scaled));
  for (std::size_t i = 0; i < scaled.cell_count(); ++i) {
    const auto r = static_cast<std::size_t>(scaled[i]);
    EXPECT_EQ(sc.source_color[static_cast<std::size_t>(sc.country_map[i])], el.merged_ids[r]);
    EXPECT_EQ(el.merged_ids[r], static_cast<Label>(coloring[r]));
  }
}

}  // namespace

TEST(MakeCompleteMap, Examples) {
  const VoxelMap one = make_complete_map(1);
  EXPECT_EQ(testoracle::extents_of(one), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(one.region_count(), 1u);
  EXPECT_EQ(dual_graph(one), complete_graph(1));
  EXPECT_EQ(map_complete_number(make_complete_map(4)), 4u);
  EXPECT_EQ(dual_graph(make_complete_map(5)), complete_graph(5));
  EXPECT_THROW(make_complete_map(0), InputError);
}

TEST(MakeCompleteMap, Layout) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const VoxelMap m = make_complete_map(n);
    EXPECT_TRUE(validate(m).empty());
    std::vector<std::size_t> sizes(n, 0);
    for (Label l : m.cells()) ++sizes[static_cast<std::size_t>(l)];
    for (std::size_t s : sizes) EXPECT_EQ(s, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(m.at(std::vector<std::size_t>{i, j, 0}), static_cast<Label>(i));
        EXPECT_EQ(m.at(std::vector<std::size_t>{i, j, 1}), static_cast<Label>(j));
      }
    }
  }
}

TEST(ScaleMap, Blocks) {
  const VoxelMap s = scale_map(VoxelMap({2, 1}, {0, 1}), 3);
  EXPECT_EQ(testoracle::extents_of(s), (std::vector<std::size_t>{6, 3}));
  EXPECT_EQ(s.at(std::vector<std::size_t>{2, 2}), 0);
  EXPECT_EQ(s.at(std::vector<std::size_t>{3, 0}), 1);
  EXPECT_EQ(dual_graph(s), complete_graph(2));
}

TEST(GeneratingElement, TwoCells) {
  const VoxelMap base({2, 1}, {0, 1});
  const Coloring c({0, 1});
  const GeneratingElement el = generating_element(base, c);
  EXPECT_EQ(el.map3d.region_count(), 2u);
  EXPECT_EQ(dual_graph(el.map3d), complete_graph(2));
  EXPECT_EQ(el.scale, 2u * 2u + 3u);
  expect_base_round_trip(base, c, el);
}

TEST(GeneratingElement, PlanarK4) {
  const VoxelMap base = planar_k4_map();
  ASSERT_EQ(dual_graph(base), complete_graph(4));
  const Coloring c({0, 1, 2, 3});
  const GeneratingElement el = generating_element(base, c);
  EXPECT_TRUE(validate(el.map3d).empty());
  EXPECT_EQ(dual_graph(el.map3d), complete_graph(4));
  expect_base_round_trip(base, c, el);
}

TEST(GeneratingElement, Checkerboard) {
  const VoxelMap base = checkerboard();
  ASSERT_EQ(base.region_count(), 9u);
  const Coloring c = checker_colors();
  const GeneratingElement el = generating_element(base, c);
  EXPECT_EQ(dual_graph(el.map3d), complete_graph(2));
  const SliceColoring sc = countries(slice(el.map3d, 2, 0));
  EXPECT_EQ(sc.country_map.region_count(), 9u);  // padding is VOID, so no extra countries
  EXPECT_EQ(std::set<Label>(sc.source_color.begin(), sc.source_color.end()).size(), 2u);
  expect_base_round_trip(base, c, el);
}

TEST(GeneratingElement, NonAdjacentColorsStillComplete) {
  // colors 0 and 2 never meet in the base; the top block must join them
  const VoxelMap base({3, 1}, {0, 1, 2});
  const Coloring c({0, 1, 2});
  const GeneratingElement el = generating_element(base, c);
  EXPECT_EQ(dual_graph(el.map3d), complete_graph(3));
  expect_base_round_trip(base, c, el);
}

TEST(GeneratingElement, RejectsBadInput) {
  EXPECT_THROW(generating_element(VoxelMap({2, 1}, {0, 1}), Coloring({0, 0})), InputError);
  EXPECT_THROW(generating_element(VoxelMap({2, 1}, {0, 1}), Coloring({0})), InputError);
  EXPECT_THROW(generating_element(make_complete_map(2), Coloring({0, 1})), InputError);
  EXPECT_THROW(generating_element(VoxelMap({3, 1}, {0, 1, 0}), Coloring({0, 1})), InputError);
}

TEST(GeneratingElement, RandomMapsWithOptimalColoring) {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const VoxelMap base = random_map2d(3 + s % 5, 3 + s % 4, 1 + s % 9, 300 + s);
    const Coloring c = chromatic_number(dual_graph(base)).certificate;
    const GeneratingElement el = generating_element(base, c);
    EXPECT_TRUE(validate(el.map3d).empty());
    EXPECT_EQ(dual_graph(el.map3d), complete_graph(c.palette_size()));
    expect_base_round_trip(base, c, el);
  }
}

TEST(BreakToCompleteNumber, Examples) {
  const VoxelMap k4 = break_to_complete_number(make_complete_map(5), 4);
  EXPECT_EQ(k4.region_count(), 4u);
  EXPECT_EQ(dual_graph(k4), complete_graph(4));
  const VoxelMap planar = planar_k4_map();
  EXPECT_EQ(break_to_complete_number(planar, 4), planar);
  EXPECT_EQ(break_to_complete_number(random_map2d(6, 6, 8, 5), 1).region_count(), 1u);
  EXPECT_THROW(break_to_complete_number(planar, 0), InputError);
}

TEST(BreakToCompleteNumber, BoundHoldsAndRegionsShrink) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const VoxelMap m = random_map2d(6, 6, 3 + s % 9, 40 + s);
    for (std::size_t k = 1; k <= 4; ++k) {
      const VoxelMap out = break_to_complete_number(m, k);
      EXPECT_TRUE(validate(out).empty());
      EXPECT_LE(map_complete_number(out), k);
      EXPECT_LE(out.region_count(), m.region_count());
    }
  }
}

TEST(Fixtures, PlanarK4) {
  const VoxelMap m = planar_k4_map();
  EXPECT_EQ(m.dims(), 2u);
  EXPECT_EQ(dual_graph(m), complete_graph(4));
}

TEST(Fixtures, SubdividedK4) {
  const VoxelMap m = subdivided_k4_map();
  const Graph d = dual_graph(m);
  EXPECT_EQ(d.vertex_count(), 10u);
  EXPECT_EQ(d.edge_count(), 12u);
  EXPECT_EQ(chromatic_number(d).value, 2u);
  EXPECT_EQ(complete_number(d).value, 4u);
}

TEST(Fixtures, SolidK2Section) {
  const VoxelMap f = solid_k2_section_fixture();
  EXPECT_EQ(f.dims(), 3u);
  EXPECT_EQ(dual_graph(f), complete_graph(2));
  const SliceColoring sc = countries(slice(f, 2, 0));
  const Graph d = dual_graph(sc.country_map);
  EXPECT_EQ(complete_number(d).value, 4u);
  EXPECT_EQ(chromatic_number(d).value, 2u);
  EXPECT_EQ(std::set<Label>(sc.source_color.begin(), sc.source_color.end()).size(), 2u);
}
