#include "regionkit/harness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "regionkit/constructions.hpp"
#include "regionkit/errors.hpp"
#include "regionkit/io.hpp"

namespace regionkit {

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 1;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

double Xorshift64Star::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Xorshift64Star::below(std::uint64_t n) {
  if (n == 0) throw InputError("below(0)");
  return next() % n;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  Xorshift64Star rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.uniform() < p) edges.push_back({i, j});
  return Graph(n, edges);
}

VoxelMap random_map2d(std::size_t width, std::size_t height, std::size_t regions, std::uint64_t seed) {
  const std::size_t cells = width * height;
  if (width == 0 || height == 0) throw InputError("random_map2d: extents must be positive");
  if (regions == 0 || regions > cells) {
    throw InputError("random_map2d: need 1 <= regions <= width * height");
  }
  Xorshift64Star rng(seed);
  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < regions; ++i) std::swap(order[i], order[i + rng.below(cells - i)]);

  std::vector<Label> label(cells, kVoid);
  std::vector<std::size_t> frontier;
  for (std::size_t r = 0; r < regions; ++r) {
    label[order[r]] = static_cast<Label>(r);
    frontier.push_back(order[r]);
  }
  while (!frontier.empty()) {
    const std::size_t k = rng.below(frontier.size());
    const std::size_t cell = frontier[k];
    frontier[k] = frontier.back();
    frontier.pop_back();
    const std::size_t x = cell % width;
    const std::size_t y = cell / width;
    const std::array<std::optional<std::size_t>, 4> nbrs{
        x > 0 ? std::optional(cell - 1) : std::nullopt,
        x + 1 < width ? std::optional(cell + 1) : std::nullopt,
        y > 0 ? std::optional(cell - width) : std::nullopt,
        y + 1 < height ? std::optional(cell + width) : std::nullopt,
    };
    for (const auto& nb : nbrs) {
      if (nb && label[*nb] == kVoid) {
        label[*nb] = label[cell];
        frontier.push_back(*nb);
      }
    }
  }
  return relabel_by_first_appearance(VoxelMap({width, height}, std::move(label)));
}

VoxelMap random_map1d(std::size_t length, std::size_t regions, std::uint64_t seed) {
  const VoxelMap flat = random_map2d(length, 1, regions, seed);
  return VoxelMap({length}, {flat.cells().begin(), flat.cells().end()});
}

namespace {

// Upper-triangle bit code of a graph on n <= 11 vertices under `perm`
// (perm[new] = old): bit index of pair (i, j), i < j, is j(j-1)/2 + i.
std::uint64_t pair_code(const std::vector<std::uint16_t>& rows, const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  const std::size_t n = perm.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (rows[perm[i]] >> perm[j] & 1u) code |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
  return code;
}

// Maximum code over relabelings that list vertices by non-increasing degree.
std::uint64_t canonical_code(const std::vector<std::uint16_t>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto degree = [&](std::size_t v) { return std::popcount(static_cast<unsigned>(rows[v])); };
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return degree(a) > degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end) of equal degree
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && degree(perm[j]) == degree(perm[i])) ++j;
    std::sort(perm.begin() + static_cast<std::ptrdiff_t>(i), perm.begin() + static_cast<std::ptrdiff_t>(j));
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  // Odometer over the permutations of every degree class.
  for (;;) {
    best = std::max(best, pair_code(rows, perm));
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = perm.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
      auto last = perm.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
      if (std::next_permutation(first, last)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

Graph decode(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (code >> (j * (j - 1) / 2 + i) & 1u) edges.push_back({i, j});
  return Graph(n, edges);
}

}  // namespace

std::vector<Graph> all_graphs_upto(std::size_t n) {
  if (n > 8) throw CapacityError("all_graphs_upto: at most 8 vertices");
  std::vector<Graph> out{Graph(0)};
  std::set<std::uint64_t> level{0};  // the single graph on 0 vertices
  for (std::size_t k = 1; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      std::vector<std::uint16_t> rows(k, 0);
      for (std::size_t j = 1; j + 1 < k; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (code >> (j * (j - 1) / 2 + i) & 1u) {
            rows[i] |= static_cast<std::uint16_t>(1u << j);
            rows[j] |= static_cast<std::uint16_t>(1u << i);
          }
      const std::size_t fresh = k - 1;
      for (std::uint32_t subset = 0; subset < (1u << fresh); ++subset) {
        std::vector<std::uint16_t> ext = rows;
        for (std::size_t i = 0; i < fresh; ++i) {
          if (subset >> i & 1u) {
            ext[i] |= static_cast<std::uint16_t>(1u << fresh);
            ext[fresh] |= static_cast<std::uint16_t>(1u << i);
          }
        }
        next.insert(canonical_code(ext));
      }
    }
    for (std::uint64_t code : next) out.push_back(decode(k, code));
    level = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct TrialOutcome {
  std::vector<SweepViolation> violations;
  std::optional<SweepSkip> skip;
  std::vector<std::string> tallies;
};

template <class Fn>
std::vector<TrialOutcome> run_trials(std::size_t count, Execution exec, Fn&& fn) {
  std::vector<TrialOutcome> out(count);
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string sweep) { report_.sweep = std::move(sweep); }

  void config(std::string key, std::uint64_t value) { report_.config.push_back({std::move(key), value}); }

  // Outcomes are appended in trial order; trial numbers continue across phases.
  void absorb(std::vector<TrialOutcome>& outcomes) {
    for (auto& o : outcomes) {
      for (auto& v : o.violations) {
        v.trial += report_.trials_run;
        report_.violations.push_back(std::move(v));
      }
      if (o.skip) {
        o.skip->trial += report_.trials_run;
        report_.skipped.push_back(std::move(*o.skip));
      }
      for (auto& t : o.tallies) ++tallies_[t];
    }
    report_.trials_run += outcomes.size();
  }

  template <class Fn>
  void phase(const std::string& name, std::size_t count, Execution exec, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto outcomes = run_trials(count, exec, std::forward<Fn>(fn));
    absorb(outcomes);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    report_.timing.push_back({name, elapsed.count()});
  }

  SweepReport finish() && {
    for (auto& [key, count] : tallies_) report_.tallies.push_back({key, count});
    return std::move(report_);
  }

 private:
  SweepReport report_;
  std::map<std::string, std::size_t> tallies_;
};

TrialOutcome check_hadwiger(std::size_t trial, const Graph& g, const SolverLimits& limits) {
  TrialOutcome out;
  try {
    const ChromaticResult chi = chromatic_number(g, limits);
    const CompleteNumberResult h = complete_number(g, limits);
    if (!is_proper(g, chi.certificate) || chi.certificate.palette_size() != chi.value) {
      out.violations.push_back({trial, "chromatic_certificate", to_graph6(g), "witness coloring rejected"});
    }
    if (h.certificate.size() != h.value || !is_complete_region_family(g, h.certificate)) {
      out.violations.push_back({trial, "complete_certificate", to_graph6(g), "witness family rejected"});
    }
    if (chi.value > h.value) {
      out.violations.push_back({trial, "chi<=h", to_graph6(g),
                                "chi = " + std::to_string(chi.value) + ", h = " + std::to_string(h.value)});
    }
    out.tallies.push_back("chi=" + std::to_string(chi.value) + ",h=" + std::to_string(h.value));
  } catch (const CapacityError& e) {
    out.skip = SweepSkip{trial, to_graph6(g), e.what()};
  }
  return out;
}

}  // namespace

SweepReport hadwiger_sweep_over(std::span<const Graph> graphs, Execution exec) {
  ReportBuilder builder("hadwiger");
  builder.config("graphs", graphs.size());
  builder.phase("graphs", graphs.size(), exec,
                [&](std::size_t i) { return check_hadwiger(i, graphs[i], SolverLimits{}); });
  return std::move(builder).finish();
}

SweepReport hadwiger_sweep(const HadwigerSweepConfig& config, Execution exec) {
  if (config.min_nodes > config.max_nodes) throw InputError("hadwiger_sweep: min_nodes > max_nodes");
  ReportBuilder builder("hadwiger");
  builder.config("min_nodes", config.min_nodes);
  builder.config("max_nodes", config.max_nodes);
  builder.config("trials", config.trials);
  builder.config("seed", config.seed);
  builder.config("exhaustive_upto", config.exhaustive_upto);
  builder.config("max_component_vertices", config.limits.max_component_vertices);

  if (config.exhaustive_upto > 0) {
    const std::vector<Graph> all = all_graphs_upto(config.exhaustive_upto);
    builder.phase("exhaustive", all.size(), exec,
                  [&](std::size_t i) { return check_hadwiger(i, all[i], config.limits); });
  }
  builder.phase("random", config.trials, exec, [&](std::size_t i) {
    Xorshift64Star rng(trial_seed(config.seed, i));
    const std::size_t n = config.min_nodes + rng.below(config.max_nodes - config.min_nodes + 1);
    const double p = 0.1 + 0.8 * rng.uniform();
    return check_hadwiger(i, random_graph(n, p, rng.next()), config.limits);
  });
  return std::move(builder).finish();
}

SweepReport planar_sweep(const PlanarSweepConfig& config, Execution exec) {
  if (config.dims != 1 && config.dims != 2) throw InputError("planar_sweep: dims must be 1 or 2");
  if (config.min_regions == 0 || config.min_regions > config.max_regions) {
    throw InputError("planar_sweep: need 1 <= min_regions <= max_regions");
  }
  const std::size_t height = config.dims == 1 ? 1 : config.height;
  if (config.max_regions > config.width * height) throw InputError("planar_sweep: too many regions for the box");
  const std::size_t bound = config.dims == 1 ? 2 : 4;

  ReportBuilder builder(config.dims == 1 ? "line" : "planar");
  builder.config("dims", config.dims);
  builder.config("width", config.width);
  builder.config("height", height);
  builder.config("min_regions", config.min_regions);
  builder.config("max_regions", config.max_regions);
  builder.config("trials", config.trials);
  builder.config("seed", config.seed);

  builder.phase("maps", config.trials, exec, [&](std::size_t i) {
    TrialOutcome out;
    Xorshift64Star rng(trial_seed(config.seed, i));
    const std::size_t regions = config.min_regions + rng.below(config.max_regions - config.min_regions + 1);
    const VoxelMap m = config.dims == 1 ? random_map1d(config.width, regions, rng.next())
                                        : random_map2d(config.width, height, regions, rng.next());
    const std::string instance = emit_map_document(m);
    if (!validate(m).empty()) {
      out.violations.push_back({i, "generator_valid", instance, validate(m).front().message});
      return out;
    }
    try {
      const Graph dual = dual_graph(m);
      const std::size_t h = complete_number(dual).value;
      const std::size_t chi = chromatic_number(dual).value;
      if (h > bound) {
        out.violations.push_back({i, "complete_number<=" + std::to_string(bound), instance,
                                  "complete number " + std::to_string(h)});
      }
      if (chi > bound) {
        out.violations.push_back({i, "chi<=" + std::to_string(bound), instance,
                                  "chromatic number " + std::to_string(chi)});
      }
      out.tallies.push_back("chi=" + std::to_string(chi) + ",h=" + std::to_string(h));
    } catch (const CapacityError& e) {
      out.skip = SweepSkip{i, instance, e.what()};
    }
    return out;
  });
  return std::move(builder).finish();
}

std::string check_slice_coloring(const VoxelMap& solid, std::size_t axis, std::size_t index) {
  const SliceColoring sc = countries(slice(solid, axis, index));
  const std::set<Label> used(sc.source_color.begin(), sc.source_color.end());
  if (used.size() > solid.region_count()) {
    return std::to_string(used.size()) + " source colors for " + std::to_string(solid.region_count()) + " regions";
  }
  if (!validate(sc.country_map).empty()) return "country map is not a valid map";
  const Graph dual = dual_graph(sc.country_map);
  for (const Edge& e : dual.edges()) {
    if (sc.source_color[e.u] == sc.source_color[e.v]) {
      return "countries " + std::to_string(e.u) + " and " + std::to_string(e.v) + " touch with color " +
             std::to_string(sc.source_color[e.u]);
    }
  }
  return {};
}

namespace {

void check_all_slices(std::size_t trial, const VoxelMap& solid, const std::string& instance, TrialOutcome& out) {
  for (std::size_t axis = 0; axis < solid.dims(); ++axis) {
    for (std::size_t index = 0; index < solid.extents()[axis]; ++index) {
      const std::string problem = check_slice_coloring(solid, axis, index);
      if (!problem.empty()) {
        out.violations.push_back({trial, "slice_coloring", instance,
                                  "axis " + std::to_string(axis) + " index " + std::to_string(index) + ": " + problem});
        return;
      }
    }
  }
}

}  // namespace

SweepReport slice_sweep(const SliceSweepConfig& config, Execution exec) {
  if (config.max_side < 2 || config.max_regions < 1 || config.max_height < 1 || config.max_complete < 1) {
    throw InputError("slice_sweep: sizes must be positive (max_side >= 2)");
  }
  ReportBuilder builder("slice");
  builder.config("trials", config.trials);
  builder.config("seed", config.seed);
  builder.config("max_side", config.max_side);
  builder.config("max_regions", config.max_regions);
  builder.config("max_height", config.max_height);
  builder.config("max_complete", config.max_complete);

  builder.phase("solids", config.trials, exec, [&](std::size_t i) {
    TrialOutcome out;
    Xorshift64Star rng(trial_seed(config.seed, i));
    const std::size_t kind = i % 3;
    if (kind == 0) {
      const std::size_t n = 1 + rng.below(config.max_complete);
      const VoxelMap solid = make_complete_map(n);
      check_all_slices(i, solid, emit_map_document(solid), out);
      out.tallies.push_back("complete_map");
      return out;
    }
    const std::size_t w = 2 + rng.below(config.max_side - 1);
    const std::size_t h = 2 + rng.below(config.max_side - 1);
    const std::size_t regions = 1 + rng.below(std::min(config.max_regions, w * h));
    const VoxelMap base = random_map2d(w, h, regions, rng.next());
    const std::string base_doc = emit_map_document(base);
    if (kind == 1) {
      const std::size_t height = 1 + rng.below(config.max_height);
      const VoxelMap solid = extrude(base, height);
      if (!(dual_graph(solid) == dual_graph(base))) {
        out.violations.push_back({i, "extrusion_dual", base_doc, "height " + std::to_string(height)});
      }
      for (std::size_t z = 0; z < height; ++z) {
        if (!equal_up_to_relabeling(countries(slice(solid, 2, z)).country_map, base)) {
          out.violations.push_back({i, "extrusion_round_trip", base_doc, "layer " + std::to_string(z)});
          break;
        }
      }
      check_all_slices(i, solid, base_doc, out);
      out.tallies.push_back("extrusion");
      return out;
    }
    const Coloring coloring = chromatic_number(dual_graph(base)).certificate;
    try {
      const GeneratingElement element = generating_element(base, coloring);
      check_all_slices(i, element.map3d, base_doc, out);
    } catch (const ConstructionError& e) {
      out.violations.push_back({i, "generating_element", base_doc, e.what()});
    }
    out.tallies.push_back("generating_element");
    return out;
  });
  return std::move(builder).finish();
}

}  // namespace regionkit
