#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regionkit/graph.hpp"
#include "regionkit/solvers.hpp"
#include "regionkit/voxmap.hpp"

namespace regionkit {

// ---------------------------------------------------------------------------
// Random numbers
//
// Every generator draws from xorshift64*:
//   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D
// seeded with splitmix64(seed):
//   z = seed + 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)      (a zero result is replaced by 1)
// uniform() = (next() >> 11) * 2^-53, below(n) = next() % n.
// Trial i of a sweep with master seed S uses trial_seed(S, i).

std::uint64_t splitmix64(std::uint64_t x);

/// splitmix64(master ^ (0x9E3779B97F4A7C15 * (index + 1))).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  double uniform();
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// G(n, p): pairs (i, j), i < j, in lexicographic order, each kept iff
/// uniform() < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Partition of a width x height box into `regions` face-connected regions:
/// seed cells drawn without replacement (partial Fisher-Yates over cell
/// indices), then grown from a frontier popped at random positions. Labels
/// are renumbered by first appearance.
VoxelMap random_map2d(std::size_t width, std::size_t height, std::size_t regions, std::uint64_t seed);

/// 1D map of `length` cells; same generator with height 1.
VoxelMap random_map1d(std::size_t length, std::size_t regions, std::uint64_t seed);

/// One representative per isomorphism class of graphs with 0..n vertices
/// (n <= 8), ordered by vertex count, then canonical code.
std::vector<Graph> all_graphs_upto(std::size_t n);

// ---------------------------------------------------------------------------
// Sweeps

enum class Execution { kSerial, kParallel };

struct SweepViolation {
  std::size_t trial = 0;
  std::string property;
  /// Serialized instance: graph6 for graphs, a map document for maps.
  std::string instance;
  std::string details;
};

struct SweepSkip {
  std::size_t trial = 0;
  std::string instance;
  std::string reason;
};

struct PhaseTiming {
  std::string phase;
  double milliseconds = 0;
};

struct ConfigEntry {
  std::string key;
  std::uint64_t value = 0;
};

/// Statistic that is a pure function of the trials (kept out of timing).
struct Tally {
  std::string key;
  std::size_t count = 0;
};

struct SweepReport {
  std::string sweep;
  std::vector<ConfigEntry> config;
  std::size_t trials_run = 0;
  std::vector<SweepViolation> violations;
  std::vector<SweepSkip> skipped;
  std::vector<Tally> tallies;
  std::vector<PhaseTiming> timing;

  bool ok() const { return violations.empty(); }
};

struct HadwigerSweepConfig {
  std::size_t min_nodes = 1;
  std::size_t max_nodes = 12;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  /// Also sweep every graph on at most this many vertices (0 = skip).
  std::size_t exhaustive_upto = 0;
  SolverLimits limits{};
};

/// Records a violation whenever chi > h. Random trial i draws
/// n = min + below(max - min + 1), p = 0.1 + 0.8 * uniform(), then
/// random_graph(n, p, next()).
SweepReport hadwiger_sweep(const HadwigerSweepConfig& config, Execution exec = Execution::kParallel);

/// Same check over an explicit list of graphs.
SweepReport hadwiger_sweep_over(std::span<const Graph> graphs, Execution exec = Execution::kParallel);

struct PlanarSweepConfig {
  /// 2 for plane maps, 1 for line maps.
  std::size_t dims = 2;
  std::size_t width = 8;
  std::size_t height = 8;
  std::size_t min_regions = 2;
  std::size_t max_regions = 12;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
};

/// Checks map_complete_number <= 4 and chi(dual) <= 4 for random plane maps
/// (<= 2 and <= 2 for line maps).
SweepReport planar_sweep(const PlanarSweepConfig& config, Execution exec = Execution::kParallel);

struct SliceSweepConfig {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t max_side = 6;
  std::size_t max_regions = 8;
  std::size_t max_height = 5;
  std::size_t max_complete = 6;
};

/// Trials rotate over three solids: make_complete_map(n), extrusions of
/// random plane maps and generating elements of random plane maps. Every
/// slice along every axis must yield a proper source coloring with at most
/// region_count colors; extrusions must also keep their dual and give back
/// the base map at every layer.
SweepReport slice_sweep(const SliceSweepConfig& config, Execution exec = Execution::kParallel);

/// Properness and color-count check for a single slice; empty when fine.
std::string check_slice_coloring(const VoxelMap& solid, std::size_t axis, std::size_t index);

}  // namespace regionkit
