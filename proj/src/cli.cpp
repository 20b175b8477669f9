#include "regionkit/cli.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "regionkit/constructions.hpp"
#include "regionkit/errors.hpp"
#include "regionkit/harness.hpp"
#include "regionkit/io.hpp"
#include "regionkit/solvers.hpp"
#include "regionkit/voxmap.hpp"

namespace regionkit {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!(file << data)) throw InputError("cannot write '" + path + "'");
}

Json coloring_json(const Coloring& c) { return std::vector<std::size_t>(c.colors().begin(), c.colors().end()); }

int emit_report(const SweepReport& report, const std::string& path, std::ostream& out) {
  write_output(path, emit_json(report_to_json(report)), out);
  return report.ok() ? kExitOk : kExitViolations;
}

struct Options {
  std::string input;
  std::string output;
  std::string colors;
  std::string render;
  std::size_t n = 0;
  std::size_t axis = 0;
  std::size_t index = 0;
  std::size_t height = 1;
  bool serial = false;
  bool dot = false;
  HadwigerSweepConfig hadwiger;
  PlanarSweepConfig planar;
  SliceSweepConfig slice;
};

}  // namespace

int cli_dispatch(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Region-family solvers and voxel region maps", "regionkit"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Chromatic and complete number of a graph (graph6 or DIMACS)");
  analyze->add_option("graph", o.input, "Graph file or -")->required();

  auto* regions = app.add_subcommand("regions", "Find a complete K-region family");
  regions->add_option("graph", o.input, "Graph file or -")->required();
  regions->add_option("--n", o.n, "Family size K")->required()->check(CLI::PositiveNumber);

  auto* conjecture = app.add_subcommand("conjecture", "Sweep chi <= complete number over random graphs");
  conjecture->add_option("--nodes", o.hadwiger.max_nodes, "Largest vertex count")->capture_default_str();
  conjecture->add_option("--min-nodes", o.hadwiger.min_nodes, "Smallest vertex count")->capture_default_str();
  conjecture->add_option("--trials", o.hadwiger.trials, "Random trials")->capture_default_str();
  conjecture->add_option("--seed", o.hadwiger.seed, "Master seed")->capture_default_str();
  conjecture->add_option("--exhaustive-upto", o.hadwiger.exhaustive_upto,
                         "Also check every graph up to this many vertices");
  conjecture->add_flag("--serial", o.serial, "Run trials on one thread");
  conjecture->add_option("--output", o.output, "Report file (default stdout)");

  auto* map = app.add_subcommand("map", "Voxel region maps");
  map->require_subcommand(1);
  auto* map_validate = map->add_subcommand("validate", "List region violations");
  map_validate->add_option("map", o.input, "Map document or -")->required();
  auto* map_dual = map->add_subcommand("dual", "Dual graph of a map");
  map_dual->add_option("map", o.input, "Map document or -")->required();
  map_dual->add_flag("--dot", o.dot, "Emit DOT instead of JSON");
  auto* map_analyze = map->add_subcommand("analyze", "Complete and chromatic number of a map");
  map_analyze->add_option("map", o.input, "Map document or -")->required();
  auto* map_slice = map->add_subcommand("slice", "Cross-section normalized into countries");
  map_slice->add_option("map", o.input, "Map document or -")->required();
  map_slice->add_option("--axis", o.axis, "Axis to fix")->required();
  map_slice->add_option("--index", o.index, "Coordinate on that axis")->required();
  map_slice->add_option("--render", o.render, "Also write the slice as a PPM image");
  auto* map_extrude = map->add_subcommand("extrude", "Append an axis of the given height");
  map_extrude->add_option("map", o.input, "Map document or -")->required();
  map_extrude->add_option("--height", o.height, "Layers")->required()->check(CLI::PositiveNumber);
  auto* map_make_kn = map->add_subcommand("make-kn", "Canonical solid K^n");
  map_make_kn->add_option("n", o.n, "Number of regions")->required()->check(CLI::PositiveNumber);
  auto* map_generate = map->add_subcommand("generate", "Solid K^c with the colored map as its base section");
  map_generate->add_option("map", o.input, "2D map document or -")->required();
  map_generate->add_option("--colors", o.colors, "Coloring document (default: optimal coloring)");
  auto* map_enforce = map->add_subcommand("enforce", "Merge regions until the complete number is <= N");
  map_enforce->add_option("map", o.input, "Map document or -")->required();
  map_enforce->add_option("--n", o.n, "Bound")->required()->check(CLI::PositiveNumber);
  for (auto* sub : {map_validate, map_dual, map_analyze, map_slice, map_extrude, map_make_kn, map_generate,
                    map_enforce}) {
    sub->add_option("--output", o.output, "Output file (default stdout)");
  }

  auto* sweep = app.add_subcommand("sweep", "Randomized map property sweeps");
  sweep->require_subcommand(1);
  auto* sweep_planar = sweep->add_subcommand("planar", "Complete and chromatic number of random plane maps");
  sweep_planar->add_option("--dims", o.planar.dims, "1 (line) or 2 (plane)")->capture_default_str();
  sweep_planar->add_option("--width", o.planar.width)->capture_default_str();
  sweep_planar->add_option("--height", o.planar.height)->capture_default_str();
  sweep_planar->add_option("--min-regions", o.planar.min_regions)->capture_default_str();
  sweep_planar->add_option("--max-regions", o.planar.max_regions)->capture_default_str();
  sweep_planar->add_option("--trials", o.planar.trials)->capture_default_str();
  sweep_planar->add_option("--seed", o.planar.seed)->capture_default_str();
  auto* sweep_slice = sweep->add_subcommand("slice", "Slice coloring and extrusion checks on 3D maps");
  sweep_slice->add_option("--trials", o.slice.trials)->capture_default_str();
  sweep_slice->add_option("--seed", o.slice.seed)->capture_default_str();
  sweep_slice->add_option("--max-side", o.slice.max_side)->capture_default_str();
  sweep_slice->add_option("--max-regions", o.slice.max_regions)->capture_default_str();
  sweep_slice->add_option("--max-height", o.slice.max_height)->capture_default_str();
  sweep_slice->add_option("--max-complete", o.slice.max_complete)->capture_default_str();
  for (auto* sub : {sweep_planar, sweep_slice}) {
    sub->add_flag("--serial", o.serial, "Run trials on one thread");
    sub->add_option("--output", o.output, "Report file (default stdout)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  const Execution exec = o.serial ? Execution::kSerial : Execution::kParallel;
  try {
    if (*analyze) {
      const Graph g = parse_graph_text(read_input(o.input, in));
      const ChromaticResult chi = chromatic_number(g);
      const CompleteNumberResult h = complete_number(g);
      Json j{{"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"chromatic_number", chi.value},
             {"coloring", coloring_json(chi.certificate)},
             {"complete_number", h.value},
             {"certificate", family_to_json(h.certificate)},
             {"hadwiger_holds", chi.value <= h.value}};
      out << emit_json(j);
      return kExitOk;
    }
    if (*regions) {
      const Graph g = parse_graph_text(read_input(o.input, in));
      if (const auto fam = find_complete_family(g, o.n)) {
        out << emit_json({{"n", o.n}, {"regions", family_to_json(*fam)}});
      } else {
        out << "absent\n";
      }
      return kExitOk;
    }
    if (*conjecture) return emit_report(hadwiger_sweep(o.hadwiger, exec), o.output, out);

    if (*map) {
      if (*map_make_kn) {
        write_output(o.output, emit_map_document(make_complete_map(o.n)), out);
        return kExitOk;
      }
      if (*map_validate) {
        const MapDocument doc = parse_map_document(read_input(o.input, in), false);
        const auto violations = validate(doc.map);
        write_output(o.output, emit_json({{"valid", violations.empty()}, {"violations", violations_to_json(violations)}}),
                     out);
        return violations.empty() ? kExitOk : kExitViolations;
      }
      const MapDocument doc = parse_map_document(read_input(o.input, in));
      if (*map_dual) {
        const Graph dual = dual_graph(doc.map);
        write_output(o.output, o.dot ? emit_dot(dual) : emit_json(graph_to_json(dual)), out);
      } else if (*map_analyze) {
        const Graph dual = dual_graph(doc.map);
        const CompleteNumberResult h = complete_number(dual);
        const ChromaticResult chi = chromatic_number(dual);
        Json j{{"dims", std::vector<std::size_t>(doc.map.extents().begin(), doc.map.extents().end())},
               {"regions", doc.map.region_count()},
               {"dual", graph_to_json(dual)},
               {"complete_number", h.value},
               {"certificate", family_to_json(h.certificate)},
               {"chromatic_number", chi.value},
               {"coloring", coloring_json(chi.certificate)}};
        write_output(o.output, emit_json(j), out);
      } else if (*map_slice) {
        const VoxelMap raw = slice(doc.map, o.axis, o.index);
        const SliceColoring sc = countries(raw);
        if (!o.render.empty()) write_output(o.render, render2d(raw), out);
        const Json meta{{"axis", o.axis}, {"index", o.index}, {"source_color", sc.source_color}};
        write_output(o.output, emit_map_document(sc.country_map, meta), out);
      } else if (*map_extrude) {
        write_output(o.output, emit_map_document(extrude(doc.map, o.height)), out);
      } else if (*map_generate) {
        const Coloring coloring =
            o.colors.empty() ? chromatic_number(dual_graph(doc.map)).certificate : parse_coloring(read_input(o.colors, in));
        const GeneratingElement el = generating_element(doc.map, coloring);
        const Json meta{{"merged_ids", el.merged_ids}, {"scale", el.scale}};
        write_output(o.output, emit_map_document(el.map3d, meta), out);
      } else if (*map_enforce) {
        write_output(o.output, emit_map_document(break_to_complete_number(doc.map, o.n)), out);
      }
      return kExitOk;
    }

    if (*sweep_planar) return emit_report(planar_sweep(o.planar, exec), o.output, out);
    if (*sweep_slice) return emit_report(slice_sweep(o.slice, exec), o.output, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacityError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  err << app.help();
  return kExitInputError;
}

}  // namespace regionkit
