#pragma once

#include <cstddef>
#include <vector>

#include "regionkit/graph.hpp"
#include "regionkit/voxmap.hpp"

namespace regionkit {

/// 3D map realizing K^c whose base layer is a scaled copy of a colored 2D map.
struct GeneratingElement {
  VoxelMap map3d;
  /// Base region id -> label in map3d (its color).
  std::vector<Label> merged_ids;
  /// Integer magnification applied to the base map in layer z = 0.
  std::size_t scale = 1;
};

/// Extents [n, n, 2]: cell (x, y, 0) = x and cell (x, y, 1) = y. Region i is
/// row i of layer 0 plus column i of layer 1, joined at (i, i); every pair i, j
/// touches across (i, j, 0) / (i, j, 1). The dual is K^n.
VoxelMap make_complete_map(std::size_t n);

/// Magnifies a 2D map by `factor` along both axes.
VoxelMap scale_map(const VoxelMap& base, std::size_t factor);

/// Builds a 3D map whose z = 0 layer is `base` scaled by 2c + 3 with every
/// region labeled by its color, and whose dual is exactly K^c.
///
/// Layout above the base: one pillar per region rising from the centre of
/// one of its scaled blocks; in layer 1 + k the pillars of color k are
/// joined by a comb (a column just right of each pillar down to a trunk row
/// past the footprint); a riser from the trunk of color k climbs to region k
/// of a make_complete_map(c) block on top. The result is checked by
/// validate(), a K^c dual comparison and a base-layer comparison before it is
/// returned; any mismatch throws ConstructionError.
GeneratingElement generating_element(const VoxelMap& base, const Coloring& coloring);

/// Merges adjacent regions until map_complete_number(result) <= n.
///
/// Each step takes the certificate of the current complete number, picks
/// the lexicographically smallest dual edge (a, b) between two of its
/// branch sets, relabels b as a and renumbers labels by first appearance.
VoxelMap break_to_complete_number(const VoxelMap& m, std::size_t n);

/// Four pairwise face-adjacent 2D regions (dual K^4).
VoxelMap planar_k4_map();

/// 2D map whose dual is the 1-subdivision of K^4: four branch regions, six
/// connector regions, VOID between.
VoxelMap subdivided_k4_map();

/// Solid with two regions whose z = 0 section is subdivided_k4_map()
/// (scaled), colored with two colors.
VoxelMap solid_k2_section_fixture();

}  // namespace regionkit
