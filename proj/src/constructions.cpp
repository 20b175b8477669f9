#include "regionkit/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <string_view>

#include "regionkit/errors.hpp"
#include "regionkit/solvers.hpp"

namespace regionkit {

VoxelMap make_complete_map(std::size_t n) {
  if (n == 0) throw InputError("make_complete_map needs n >= 1");
  VoxelMap m({n, n, 2});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      m.set(std::array{x, y, std::size_t{0}}, static_cast<Label>(x));
      m.set(std::array{x, y, std::size_t{1}}, static_cast<Label>(y));
    }
  }
  return m;
}

VoxelMap scale_map(const VoxelMap& base, std::size_t factor) {
  if (base.dims() != 2) throw InputError("scale_map needs a 2D map");
  if (factor == 0) throw InputError("scale factor must be positive");
  const std::size_t w = base.extents()[0];
  const std::size_t h = base.extents()[1];
  VoxelMap out({w * factor, h * factor});
  for (std::size_t y = 0; y < h * factor; ++y)
    for (std::size_t x = 0; x < w * factor; ++x)
      out.set(std::array{x, y}, base.at(std::array{x / factor, y / factor}));
  return out;
}

namespace {

// Writes cells of a solid under construction; overwriting a cell that
// belongs to another label is a routing collision.
class SolidCanvas {
 public:
  explicit SolidCanvas(std::vector<std::size_t> extents) : map_(std::move(extents)) {}

  void paint(std::size_t x, std::size_t y, std::size_t z, Label label) {
    const std::array coord{x, y, z};
    const Label current = map_.at(coord);
    if (current != kVoid && current != label) {
      throw ConstructionError("generating_element: routing collision at (" + std::to_string(x) +
                              ", " + std::to_string(y) + ", " + std::to_string(z) + ") between labels " +
                              std::to_string(current) + " and " + std::to_string(label));
    }
    map_.set(coord, label);
  }

  VoxelMap release() && { return std::move(map_); }

 private:
  VoxelMap map_;
};

struct Anchor {
  std::size_t x;
  std::size_t y;
};

void check_base_layer(const VoxelMap& solid, const VoxelMap& scaled, const Coloring& coloring) {
  const VoxelMap layer = slice(solid, 2, 0);
  for (std::size_t y = 0; y < layer.extents()[1]; ++y) {
    for (std::size_t x = 0; x < layer.extents()[0]; ++x) {
      const std::array c{x, y};
      Label expected = kVoid;
      if (x < scaled.extents()[0] && y < scaled.extents()[1] && scaled.at(c) != kVoid) {
        expected = static_cast<Label>(coloring[static_cast<std::size_t>(scaled.at(c))]);
      }
      if (layer.at(c) != expected) {
        throw ConstructionError("generating_element: base layer differs from the scaled map at (" +
                                std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
  // Same-colored regions never touch, so each country is one scaled region.
  const SliceColoring sc = countries(layer);
  if (sc.source_color.size() != scaled.region_count()) {
    throw ConstructionError("generating_element: base layer has " +
                            std::to_string(sc.source_color.size()) + " countries, expected " +
                            std::to_string(scaled.region_count()));
  }
}

}  // namespace

GeneratingElement generating_element(const VoxelMap& base, const Coloring& coloring) {
  if (base.dims() != 2) throw InputError("generating_element needs a 2D base map");
  require_valid(base, "generating_element");
  const std::size_t regions = base.region_count();
  if (regions == 0) throw InputError("generating_element: base map has no regions");
  const Graph dual = dual_graph(base);
  if (coloring.size() != regions) {
    throw InputError("generating_element: coloring has " + std::to_string(coloring.size()) +
                     " entries for " + std::to_string(regions) + " regions");
  }
  if (!is_proper(dual, coloring)) throw InputError("generating_element: coloring is not proper");

  const std::size_t colors = coloring.palette_size();
  const std::size_t s = 2 * colors + 3;
  const VoxelMap scaled = scale_map(base, s);
  const std::size_t sw = scaled.extents()[0];
  const std::size_t sh = scaled.extents()[1];
  const std::size_t trunk_row = sh;
  const std::size_t riser_row = sh + 1;
  const std::size_t block_z = colors + 1;

  SolidCanvas canvas({std::max(sw, colors), sh + 1 + colors, colors + 3});

  for (std::size_t y = 0; y < sh; ++y) {
    for (std::size_t x = 0; x < sw; ++x) {
      const Label l = scaled.at(std::array{x, y});
      if (l != kVoid) canvas.paint(x, y, 0, static_cast<Label>(coloring[static_cast<std::size_t>(l)]));
    }
  }

  // One anchor per base region, at the centre of the block scaled from its
  // first cell.
  std::vector<Anchor> anchors(regions);
  std::vector<bool> placed(regions, false);
  for (std::size_t i = 0; i < base.cell_count(); ++i) {
    if (base[i] == kVoid) continue;
    const auto r = static_cast<std::size_t>(base[i]);
    if (placed[r]) continue;
    placed[r] = true;
    const auto c = base.coord(i);
    anchors[r] = {c[0] * s + s / 2, c[1] * s + s / 2};
  }

  for (std::size_t color = 0; color < colors; ++color) {
    const std::size_t band = 1 + color;
    const auto label = static_cast<Label>(color);
    std::size_t trunk_lo = color;
    std::size_t trunk_hi = color;
    for (std::size_t r = 0; r < regions; ++r) {
      if (coloring[r] != color) continue;
      const Anchor a = anchors[r];
      for (std::size_t z = 1; z <= band; ++z) canvas.paint(a.x, a.y, z, label);
      for (std::size_t y = a.y; y <= trunk_row; ++y) canvas.paint(a.x + 1, y, band, label);
      trunk_lo = std::min(trunk_lo, a.x + 1);
      trunk_hi = std::max(trunk_hi, a.x + 1);
    }
    for (std::size_t x = trunk_lo; x <= trunk_hi; ++x) canvas.paint(x, trunk_row, band, label);
    for (std::size_t z = band; z < block_z; ++z) canvas.paint(color, riser_row, z, label);
  }

  const VoxelMap block = make_complete_map(colors);
  for (std::size_t z = 0; z < 2; ++z)
    for (std::size_t y = 0; y < colors; ++y)
      for (std::size_t x = 0; x < colors; ++x)
        canvas.paint(x, riser_row + y, block_z + z, block.at(std::array{x, y, z}));

  GeneratingElement out;
  out.map3d = std::move(canvas).release();
  out.scale = s;
  out.merged_ids.reserve(regions);
  for (std::size_t r = 0; r < regions; ++r) out.merged_ids.push_back(static_cast<Label>(coloring[r]));

  const auto violations = validate(out.map3d);
  if (!violations.empty()) {
    throw ConstructionError("generating_element: result is not a valid map: " + violations.front().message);
  }
  if (!(dual_graph(out.map3d) == complete_graph(colors))) {
    throw ConstructionError("generating_element: dual is not K^" + std::to_string(colors));
  }
  check_base_layer(out.map3d, scaled, coloring);
  return out;
}

VoxelMap break_to_complete_number(const VoxelMap& m, std::size_t n) {
  if (n == 0) throw InputError("break_to_complete_number needs n >= 1");
  require_valid(m, "break_to_complete_number");
  VoxelMap current = m;
  for (;;) {
    const Graph dual = dual_graph(current);
    const auto family = find_complete_family(dual, n + 1);
    if (!family) return current;

    std::vector<long> owner(dual.vertex_count(), -1);
    for (std::size_t i = 0; i < family->size(); ++i)
      for (Vertex v : family->regions[i].vertices) owner[v] = static_cast<long>(i);
    const auto it = std::find_if(dual.edges().begin(), dual.edges().end(), [&](const Edge& e) {
      return owner[e.u] >= 0 && owner[e.v] >= 0 && owner[e.u] != owner[e.v];
    });
    // Branch sets of a complete family are pairwise adjacent.
    if (it == dual.edges().end()) throw ConstructionError("complete family without a crossing edge");

    std::vector<Label> cells(current.cells().begin(), current.cells().end());
    for (Label& l : cells)
      if (l == static_cast<Label>(it->v)) l = static_cast<Label>(it->u);
    current = relabel_by_first_appearance(
        VoxelMap({current.extents().begin(), current.extents().end()}, std::move(cells)));
  }
}

namespace {

// Rows top to bottom; '.' is VOID, any other character names a region and
// regions are numbered by first appearance.
VoxelMap map_from_art(std::initializer_list<std::string_view> rows) {
  const std::size_t width = rows.begin()->size();
  VoxelMap m({width, rows.size()});
  std::map<char, Label> ids;
  std::size_t y = 0;
  for (std::string_view row : rows) {
    if (row.size() != width) throw ConstructionError("fixture rows differ in width");
    for (std::size_t x = 0; x < width; ++x) {
      if (row[x] == '.') continue;
      auto [it, inserted] = ids.emplace(row[x], static_cast<Label>(ids.size()));
      m.set(std::array{x, y}, it->second);
    }
    ++y;
  }
  const auto violations = validate(m);
  if (!violations.empty()) throw ConstructionError("fixture map is invalid: " + violations.front().message);
  return m;
}

}  // namespace

VoxelMap planar_k4_map() {
  return map_from_art({
      "AAA",
      "BDC",
      "BBC",
  });
}

VoxelMap subdivided_k4_map() {
  // A, B, C, D are the branch regions; lowercase regions subdivide the six
  // edges (e = AC, f = AB, g = BC, h = AD, i = BD, j = CD).
  return map_from_art({
      ".eeeeeeee.",
      ".AA....CC.",
      ".AAfBBgCC.",
      ".h..i...j.",
      ".DDDDDDDD.",
  });
}

VoxelMap solid_k2_section_fixture() {
  const VoxelMap base = subdivided_k4_map();
  const ChromaticResult two = chromatic_number(dual_graph(base));
  return generating_element(base, two.certificate).map3d;
}

}  // namespace regionkit
