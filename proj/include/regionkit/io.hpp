#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "regionkit/graph.hpp"
#include "regionkit/harness.hpp"
#include "regionkit/solvers.hpp"
#include "regionkit/voxmap.hpp"

namespace regionkit {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Graph formats

/// graph6 (optionally preceded by ">>graph6<<"). A single trailing newline
/// is accepted; anything else after the encoding is an error.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// DIMACS edge format: "c" comments, one "p edge N M" line, then 1-based
/// "e u v" lines. Duplicate edges collapse; loops are rejected.
Graph parse_dimacs_col(std::string_view text);
std::string to_dimacs_col(const Graph& g);

/// DIMACS when the first significant line starts with 'c', 'p' or 'e',
/// graph6 otherwise.
Graph parse_graph_text(std::string_view text);

/// Undirected DOT; vertices in index order, optional fill colors from
/// palette_rgb.
std::string emit_dot(const Graph& g);
std::string emit_dot(const Graph& g, const Coloring& coloring);

// ---------------------------------------------------------------------------
// Map documents
//
// {"cells":[...],"dims":[...],"format":1,"metadata":{...}}
// cells are row-major with the first coordinate fastest, -1 is VOID.
// metadata is optional and free-form. Emission is canonical: sorted keys,
// no insignificant whitespace, one trailing newline.

struct MapDocument {
  VoxelMap map;
  Json metadata;  // null when absent
};

/// Throws ParseError on malformed JSON or schema violations and, when
/// `check_regions` is set, InputError when the map fails validate().
MapDocument parse_map_document(std::string_view text, bool check_regions = true);
std::string emit_map_document(const VoxelMap& m, const Json& metadata = Json());

/// {"colors":[...]} or a bare array.
Coloring parse_coloring(std::string_view text);

// ---------------------------------------------------------------------------
// JSON views of results

Json graph_to_json(const Graph& g);
Json family_to_json(const RegionFamily& family);
Json violations_to_json(std::span<const Violation> violations);
Json report_to_json(const SweepReport& report, bool include_timing = true);

/// dump() plus a newline.
std::string emit_json(const Json& j);

}  // namespace regionkit
