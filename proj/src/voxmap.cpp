#include "regionkit/voxmap.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "regionkit/errors.hpp"
#include "regionkit/solvers.hpp"

namespace regionkit {

namespace {

std::vector<std::size_t> make_strides(std::span<const std::size_t> extents) {
  std::vector<std::size_t> strides(extents.size());
  std::size_t s = 1;
  for (std::size_t a = 0; a < extents.size(); ++a) {
    strides[a] = s;
    s *= extents[a];
  }
  return strides;
}

std::size_t product(std::span<const std::size_t> extents) {
  return std::accumulate(extents.begin(), extents.end(), std::size_t{1}, std::multiplies<>());
}

void check_extents(std::span<const std::size_t> extents) {
  if (extents.empty()) throw InputError("map needs at least one dimension");
  for (auto e : extents)
    if (e == 0) throw InputError("map extents must be positive");
}

// Calls fn(i, j) for every pair of face-neighbors i < j.
template <class Fn>
void for_each_face_pair(const VoxelMap& m, std::size_t begin, std::size_t end, Fn&& fn) {
  const auto extents = m.extents();
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t a = 0; a < extents.size(); ++a) {
      const std::size_t stride = m.stride(a);
      if ((i / stride) % extents[a] + 1 < extents[a]) fn(i, i + stride);
    }
  }
}

// Component id per cell (VOID cells get -1); components are numbered in
// flat index order of their first cell.
std::vector<long> label_components(const VoxelMap& m, std::vector<std::size_t>* first_cells) {
  const auto extents = m.extents();
  std::vector<long> comp(m.cell_count(), -1);
  std::vector<std::size_t> stack;
  long next = 0;
  for (std::size_t start = 0; start < m.cell_count(); ++start) {
    if (m[start] == kVoid || comp[start] >= 0) continue;
    const Label label = m[start];
    comp[start] = next;
    if (first_cells) first_cells->push_back(start);
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t a = 0; a < extents.size(); ++a) {
        const std::size_t stride = m.stride(a);
        const std::size_t c = (i / stride) % extents[a];
        if (c > 0 && comp[i - stride] < 0 && m[i - stride] == label) {
          comp[i - stride] = next;
          stack.push_back(i - stride);
        }
        if (c + 1 < extents[a] && comp[i + stride] < 0 && m[i + stride] == label) {
          comp[i + stride] = next;
          stack.push_back(i + stride);
        }
      }
    }
    ++next;
  }
  return comp;
}

Graph edges_to_graph(std::size_t regions, std::vector<Edge>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Graph(regions, pairs);
}

}  // namespace

VoxelMap::VoxelMap(std::vector<std::size_t> extents, std::vector<Label> cells)
    : extents_(std::move(extents)), cells_(std::move(cells)) {
  check_extents(extents_);
  if (cells_.size() != product(extents_)) {
    throw InputError("map has " + std::to_string(cells_.size()) + " cells, extents require " +
                     std::to_string(product(extents_)));
  }
  strides_ = make_strides(extents_);
}

VoxelMap::VoxelMap(std::vector<std::size_t> extents) : extents_(std::move(extents)) {
  check_extents(extents_);
  cells_.assign(product(extents_), kVoid);
  strides_ = make_strides(extents_);
}

std::size_t VoxelMap::index(std::span<const std::size_t> coord) const {
  if (coord.size() != extents_.size()) throw InputError("coordinate has wrong dimension");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < coord.size(); ++a) {
    if (coord[a] >= extents_[a]) throw InputError("coordinate outside the map");
    idx += coord[a] * strides_[a];
  }
  return idx;
}

std::vector<std::size_t> VoxelMap::coord(std::size_t index) const {
  std::vector<std::size_t> c(extents_.size());
  for (std::size_t a = 0; a < extents_.size(); ++a) c[a] = (index / strides_[a]) % extents_[a];
  return c;
}

std::size_t VoxelMap::region_count() const {
  Label top = kVoid;
  for (Label l : cells_) top = std::max(top, l);
  return static_cast<std::size_t>(top + 1);
}

std::vector<Violation> validate(const VoxelMap& m) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < m.cell_count(); ++i) {
    if (m[i] < kVoid) {
      out.push_back({Violation::Kind::kBadLabel, m[i], i, i,
                     "cell " + std::to_string(i) + " has invalid label " + std::to_string(m[i])});
    }
  }
  if (!out.empty()) return out;

  const std::size_t regions = m.region_count();
  std::vector<long> first_component(regions, -1);
  std::vector<std::size_t> first_cells;
  label_components(m, &first_cells);
  std::vector<bool> reported(regions, false);
  for (std::size_t c = 0; c < first_cells.size(); ++c) {
    const std::size_t cell = first_cells[c];
    const auto label = static_cast<std::size_t>(m[cell]);
    if (first_component[label] < 0) {
      first_component[label] = static_cast<long>(c);
    } else if (!reported[label]) {
      reported[label] = true;
      const std::size_t witness = first_cells[static_cast<std::size_t>(first_component[label])];
      out.push_back({Violation::Kind::kDisconnected, m[cell], witness, cell,
                     "label " + std::to_string(label) + " is disconnected: cells " +
                         std::to_string(witness) + " and " + std::to_string(cell) +
                         " are not face-connected"});
    }
  }
  for (std::size_t l = 0; l < regions; ++l) {
    if (first_component[l] < 0) {
      out.push_back({Violation::Kind::kMissingLabel, static_cast<Label>(l), 0, 0,
                     "label " + std::to_string(l) + " does not occur; ids must be dense"});
    }
  }
  return out;
}

void require_valid(const VoxelMap& m, const char* who) {
  const auto violations = validate(m);
  if (!violations.empty()) {
    throw InputError(std::string(who) + ": invalid map: " + violations.front().message);
  }
}

namespace reference {

Graph dual_graph_serial(const VoxelMap& m) {
  require_valid(m, "dual_graph");
  std::vector<Edge> pairs;
  for_each_face_pair(m, 0, m.cell_count(), [&](std::size_t i, std::size_t j) {
    const Label a = m[i];
    const Label b = m[j];
    if (a != kVoid && b != kVoid && a != b) {
      pairs.push_back({static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))});
    }
  });
  return edges_to_graph(m.region_count(), pairs);
}

}  // namespace reference

Graph dual_graph(const VoxelMap& m) {
  require_valid(m, "dual_graph");
  const std::size_t n = m.cell_count();
  std::vector<Edge> pairs;
#pragma omp parallel
  {
    std::vector<Edge> local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t block = 0; block < static_cast<std::ptrdiff_t>((n + 4095) / 4096); ++block) {
      const auto begin = static_cast<std::size_t>(block) * 4096;
      for_each_face_pair(m, begin, std::min(n, begin + 4096), [&](std::size_t i, std::size_t j) {
        const Label a = m[i];
        const Label b = m[j];
        if (a != kVoid && b != kVoid && a != b) {
          local.push_back({static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))});
        }
      });
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
#pragma omp critical(regionkit_dual_merge)
    pairs.insert(pairs.end(), local.begin(), local.end());
  }
  return edges_to_graph(m.region_count(), pairs);
}

VoxelMap slice(const VoxelMap& m, std::size_t axis, std::size_t index) {
  if (m.dims() < 2) throw InputError("slice needs a map of dimension >= 2");
  if (axis >= m.dims()) throw InputError("slice axis " + std::to_string(axis) + " out of range");
  if (index >= m.extents()[axis]) {
    throw InputError("slice index " + std::to_string(index) + " out of range for axis " +
                     std::to_string(axis));
  }
  std::vector<std::size_t> extents;
  for (std::size_t a = 0; a < m.dims(); ++a)
    if (a != axis) extents.push_back(m.extents()[a]);
  VoxelMap out(extents);
  std::vector<std::size_t> full(m.dims());
  for (std::size_t i = 0; i < out.cell_count(); ++i) {
    const auto c = out.coord(i);
    for (std::size_t a = 0, k = 0; a < m.dims(); ++a) full[a] = a == axis ? index : c[k++];
    out.set(i, m.at(full));
  }
  return out;
}

SliceColoring countries(const VoxelMap& raw) {
  std::vector<std::size_t> first_cells;
  const std::vector<long> comp = label_components(raw, &first_cells);
  std::vector<Label> cells(raw.cell_count(), kVoid);
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (comp[i] >= 0) cells[i] = static_cast<Label>(comp[i]);
  SliceColoring out{VoxelMap({raw.extents().begin(), raw.extents().end()}, std::move(cells)), {}};
  out.source_color.reserve(first_cells.size());
  for (std::size_t cell : first_cells) out.source_color.push_back(raw[cell]);
  return out;
}

VoxelMap extrude(const VoxelMap& m, std::size_t height) {
  require_valid(m, "extrude");
  if (height == 0) throw InputError("extrusion height must be positive");
  std::vector<std::size_t> extents(m.extents().begin(), m.extents().end());
  extents.push_back(height);
  std::vector<Label> cells;
  cells.reserve(m.cell_count() * height);
  for (std::size_t z = 0; z < height; ++z) cells.insert(cells.end(), m.cells().begin(), m.cells().end());
  return VoxelMap(std::move(extents), std::move(cells));
}

std::size_t map_complete_number(const VoxelMap& m) { return complete_number(dual_graph(m)).value; }

VoxelMap relabel_by_first_appearance(const VoxelMap& m) {
  std::vector<Label> rename(m.region_count(), kVoid);
  Label next = 0;
  std::vector<Label> cells(m.cells().begin(), m.cells().end());
  for (Label& l : cells) {
    if (l == kVoid) continue;
    Label& r = rename[static_cast<std::size_t>(l)];
    if (r == kVoid) r = next++;
    l = r;
  }
  return VoxelMap({m.extents().begin(), m.extents().end()}, std::move(cells));
}

bool equal_up_to_relabeling(const VoxelMap& a, const VoxelMap& b) {
  if (!std::equal(a.extents().begin(), a.extents().end(), b.extents().begin(), b.extents().end())) {
    return false;
  }
  return relabel_by_first_appearance(a) == relabel_by_first_appearance(b);
}

Rgb palette_rgb(std::size_t index) {
  static constexpr Rgb kPalette[] = {
      {230, 25, 75},   {60, 180, 75},  {255, 225, 25}, {0, 130, 200},  {245, 130, 48},
      {145, 30, 180},  {70, 240, 240}, {240, 50, 230}, {210, 245, 60}, {250, 190, 212},
      {0, 128, 128},   {220, 190, 255}, {170, 110, 40}, {128, 0, 0},   {170, 255, 195},
      {128, 128, 0},   {255, 215, 180}, {0, 0, 128},   {128, 128, 128}, {0, 0, 0},
  };
  return kPalette[index % std::size(kPalette)];
}

std::string render2d(const VoxelMap& m) {
  if (m.dims() != 2) throw InputError("render2d needs a 2D map, got " + std::to_string(m.dims()) + "D");
  const std::size_t width = m.extents()[0];
  const std::size_t height = m.extents()[1];
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.reserve(out.size() + 3 * m.cell_count());
  for (std::size_t i = 0; i < m.cell_count(); ++i) {
    const Rgb c = m[i] == kVoid ? Rgb{255, 255, 255} : palette_rgb(static_cast<std::size_t>(m[i]));
    out.push_back(static_cast<char>(c.r));
    out.push_back(static_cast<char>(c.g));
    out.push_back(static_cast<char>(c.b));
  }
  return out;
}

}  // namespace regionkit
