#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regionkit/graph.hpp"

namespace regionkit {

using Label = std::int32_t;
inline constexpr Label kVoid = -1;

/// d-dimensional box of labeled cells.
///
/// Cell (c0, ..., c_{d-1}) lives at flat index c0 + e0*(c1 + e1*(c2 + ...)):
/// the first coordinate varies fastest, so a 2D map is stored as rows of
/// extents[0] cells (x = column, y = row). Labels are region ids or kVoid.
///
/// Construction only checks the shape; region invariants (dense ids,
/// face-connected label classes) are reported by validate().
class VoxelMap {
 public:
  VoxelMap() = default;
  VoxelMap(std::vector<std::size_t> extents, std::vector<Label> cells);
  /// All-VOID map.
  explicit VoxelMap(std::vector<std::size_t> extents);

  std::size_t dims() const noexcept { return extents_.size(); }
  std::span<const std::size_t> extents() const noexcept { return extents_; }
  std::span<const Label> cells() const noexcept { return cells_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  /// Distance in flat index between neighbors along `axis`.
  std::size_t stride(std::size_t axis) const { return strides_.at(axis); }

  std::size_t index(std::span<const std::size_t> coord) const;
  std::vector<std::size_t> coord(std::size_t index) const;

  Label at(std::span<const std::size_t> coord) const { return cells_[index(coord)]; }
  Label operator[](std::size_t index) const { return cells_[index]; }
  void set(std::span<const std::size_t> coord, Label label) { cells_[index(coord)] = label; }
  void set(std::size_t index, Label label) { cells_[index] = label; }

  /// 1 + largest label (0 when all cells are VOID).
  std::size_t region_count() const;

  friend bool operator==(const VoxelMap&, const VoxelMap&) = default;

 private:
  std::vector<std::size_t> extents_;
  std::vector<std::size_t> strides_;
  std::vector<Label> cells_;
};

/// Face-connected components of every non-VOID label, numbered in flat
/// index order of their first cell, and the label each one came from.
struct SliceColoring {
  VoxelMap country_map;
  std::vector<Label> source_color;
};

struct Violation {
  enum class Kind { kBadLabel, kMissingLabel, kDisconnected };
  Kind kind = Kind::kBadLabel;
  Label label = 0;
  /// Witness cells: for kDisconnected, two cells of `label` in different
  /// components; for kBadLabel, the offending cell (both fields).
  std::size_t cell_a = 0;
  std::size_t cell_b = 0;
  std::string message;
};

/// Empty iff region ids are dense and every label class is face-connected.
std::vector<Violation> validate(const VoxelMap& m);

/// Throws InputError carrying the first violation.
void require_valid(const VoxelMap& m, const char* who);

/// One vertex per region id, i -- j iff a cell of i and a cell of j differ by
/// one step along a single axis. Corner or edge-only contact gives no edge.
/// Parallel over cell blocks when built with OpenMP.
Graph dual_graph(const VoxelMap& m);

/// Cells with coordinate `index` on `axis`; labels copied verbatim, so label
/// classes may come out split or missing. Normalize with countries().
VoxelMap slice(const VoxelMap& m, std::size_t axis, std::size_t index);

SliceColoring countries(const VoxelMap& raw);

/// Appends an axis of length `height`, copying the map into every layer.
VoxelMap extrude(const VoxelMap& m, std::size_t height);

/// complete_number(dual_graph(m)).value; m lies in the space of maps without
/// an (n+1)-region complete family iff the result is <= n.
std::size_t map_complete_number(const VoxelMap& m);

/// Relabels label classes by first appearance in flat index order.
VoxelMap relabel_by_first_appearance(const VoxelMap& m);

/// Same map up to a bijective renaming of non-VOID labels.
bool equal_up_to_relabeling(const VoxelMap& a, const VoxelMap& b);

/// Binary PPM (P6), width = extents[0], height = extents[1]. Region i gets
/// palette_rgb(i); VOID is white.
std::string render2d(const VoxelMap& m);

struct Rgb {
  std::uint8_t r, g, b;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};
Rgb palette_rgb(std::size_t index);

namespace reference {

/// Single-threaded dual graph extraction; kept as the oracle for the
/// parallel kernel.
Graph dual_graph_serial(const VoxelMap& m);

}  // namespace reference

}  // namespace regionkit
