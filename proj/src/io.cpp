#include "regionkit/io.hpp"

#include <charconv>
#include <cstdio>
#include <optional>
#include <vector>

#include "regionkit/errors.hpp"

namespace regionkit {

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip_line_end(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  text = strip_line_end(text);
  if (text.empty()) throw ParseError("graph6: empty input", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
  }
  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw ParseError("graph6: truncated 8-byte size", base + text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated 4-byte size", base + text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value(i);
    pos = 4;
  }
  if (n > (std::uint64_t{1} << 20)) throw ParseError("graph6: vertex count too large", base);

  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw ParseError("graph6: truncated adjacency data", base + text.size());
  if (text.size() > pos + bytes) throw ParseError("graph6: trailing characters", base + pos + bytes);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint64_t chunk = value(pos + k / 6);
      if (chunk >> (5 - k % 6) & 1u) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if ((value(pos + bytes - 1) & pad_mask) != 0) {
      throw ParseError("graph6: nonzero padding bits", base + pos + bytes - 1);
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  std::vector<std::uint8_t> chunks((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const std::uint64_t k = e.v * (e.v - 1) / 2 + e.u;
    chunks[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  for (auto c : chunks) out.push_back(static_cast<char>(63 + c));
  return out;
}

// ---------------------------------------------------------------------------
// DIMACS

namespace {

struct Line {
  std::string_view text;
  std::size_t offset;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end;
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, start});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t to_number(std::string_view token, std::size_t offset) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("DIMACS: expected a non-negative integer, got '" + std::string(token) + "'", offset);
  }
  return v;
}

}  // namespace

Graph parse_dimacs_col(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  for (const Line& line : split_lines(text)) {
    const auto tok = tokens(line.text);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n) throw ParseError("DIMACS: second problem line", line.offset);
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col" && tok[1] != "edges")) {
        throw ParseError("DIMACS: expected 'p edge <n> <m>'", line.offset);
      }
      n = to_number(tok[2], line.offset);
      to_number(tok[3], line.offset);
      if (*n > (std::uint64_t{1} << 20)) throw ParseError("DIMACS: vertex count too large", line.offset);
    } else if (tok[0] == "e") {
      if (!n) throw ParseError("DIMACS: edge before problem line", line.offset);
      if (tok.size() != 3) throw ParseError("DIMACS: expected 'e <u> <v>'", line.offset);
      const std::uint64_t u = to_number(tok[1], line.offset);
      const std::uint64_t v = to_number(tok[2], line.offset);
      if (u == 0 || v == 0 || u > *n || v > *n) {
        throw ParseError("DIMACS: vertex index outside 1.." + std::to_string(*n), line.offset);
      }
      if (u == v) throw ParseError("DIMACS: self-loop at vertex " + std::to_string(u), line.offset);
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError("DIMACS: unknown line type '" + std::string(tok[0]) + "'", line.offset);
    }
  }
  if (!n) throw ParseError("DIMACS: missing problem line", text.size());
  return Graph(static_cast<std::size_t>(*n), edges);
}

std::string to_dimacs_col(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    const auto tok = tokens(line.text);
    if (tok.empty()) continue;
    const char c = tok[0][0];
    if (tok[0].size() == 1 && (c == 'c' || c == 'p' || c == 'e')) return parse_dimacs_col(text);
    break;
  }
  return parse_graph6(text);
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string hex_color(std::size_t index) {
  const Rgb c = palette_rgb(index);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::string dot_body(const Graph& g, const Coloring* coloring) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (coloring) out += " [style=filled, fillcolor=\"" + hex_color((*coloring)[v]) + "\"]";
    out += ";\n";
  }
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace

std::string emit_dot(const Graph& g) { return dot_body(g, nullptr); }

std::string emit_dot(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.vertex_count()) throw InputError("emit_dot: coloring length mismatch");
  return dot_body(g, &coloring);
}

// ---------------------------------------------------------------------------
// Map documents

namespace {

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

}  // namespace

MapDocument parse_map_document(std::string_view text, bool check_regions) {
  const Json doc = parse_json(text, "map document");
  auto fail = [](const std::string& msg) { throw ParseError("map document: " + msg, 0); };
  if (!doc.is_object()) fail("top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "cells" && key != "dims" && key != "format" && key != "metadata") fail("unknown key '" + key + "'");
  }
  if (!doc.contains("format") || doc["format"] != 1) fail("\"format\" must be 1");
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) fail("\"dims\" must be a non-empty array");
  if (!doc.contains("cells") || !doc["cells"].is_array()) fail("\"cells\" must be an array");

  std::vector<std::size_t> extents;
  for (const Json& d : doc["dims"]) {
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) fail("extents must be positive integers");
    extents.push_back(d.get<std::size_t>());
  }
  std::vector<Label> cells;
  cells.reserve(doc["cells"].size());
  for (const Json& c : doc["cells"]) {
    if (!c.is_number_integer() || c.get<std::int64_t>() < -1 || c.get<std::int64_t>() > 0x7fffffff) {
      fail("cells must be integers >= -1");
    }
    cells.push_back(static_cast<Label>(c.get<std::int64_t>()));
  }
  std::size_t expected = 1;
  for (auto e : extents) expected *= e;
  if (cells.size() != expected) {
    fail("cells has " + std::to_string(cells.size()) + " entries, dims require " + std::to_string(expected));
  }
  MapDocument out{VoxelMap(std::move(extents), std::move(cells)), Json()};
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) fail("\"metadata\" must be an object");
    out.metadata = doc["metadata"];
  }
  if (check_regions) require_valid(out.map, "map document");
  return out;
}

std::string emit_map_document(const VoxelMap& m, const Json& metadata) {
  Json doc;
  doc["format"] = 1;
  doc["dims"] = std::vector<std::size_t>(m.extents().begin(), m.extents().end());
  doc["cells"] = std::vector<Label>(m.cells().begin(), m.cells().end());
  if (!metadata.is_null()) doc["metadata"] = metadata;
  return emit_json(doc);
}

Coloring parse_coloring(std::string_view text) {
  const Json doc = parse_json(text, "coloring");
  const Json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("colors")) throw ParseError("coloring: missing \"colors\"", 0);
    arr = &doc["colors"];
  }
  if (!arr->is_array()) throw ParseError("coloring: expected an array of colors", 0);
  std::vector<std::size_t> colors;
  for (const Json& c : *arr) {
    if (!c.is_number_unsigned()) throw ParseError("coloring: colors must be non-negative integers", 0);
    colors.push_back(c.get<std::size_t>());
  }
  return Coloring(std::move(colors));
}

// ---------------------------------------------------------------------------

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}, {"graph6", to_graph6(g)}};
}

Json family_to_json(const RegionFamily& family) {
  Json out = Json::array();
  for (const Region& r : family.regions) out.push_back(r.vertices);
  return out;
}

Json violations_to_json(std::span<const Violation> violations) {
  Json out = Json::array();
  for (const Violation& v : violations) {
    const char* kind = v.kind == Violation::Kind::kBadLabel       ? "bad_label"
                       : v.kind == Violation::Kind::kMissingLabel ? "missing_label"
                                                                  : "disconnected";
    Json item{{"kind", kind}, {"label", v.label}, {"message", v.message}};
    if (v.kind != Violation::Kind::kMissingLabel) item["cells"] = {v.cell_a, v.cell_b};
    out.push_back(std::move(item));
  }
  return out;
}

Json report_to_json(const SweepReport& report, bool include_timing) {
  Json config = Json::object();
  for (const auto& c : report.config) config[c.key] = c.value;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"trial", v.trial}, {"property", v.property}, {"instance", v.instance}, {"details", v.details}});
  }
  Json skipped = Json::array();
  for (const auto& s : report.skipped) {
    skipped.push_back({{"trial", s.trial}, {"instance", s.instance}, {"reason", s.reason}});
  }
  Json tallies = Json::object();
  for (const auto& t : report.tallies) tallies[t.key] = t.count;
  Json out{{"sweep", report.sweep},     {"config", config},   {"trials_run", report.trials_run},
           {"violations", violations}, {"skipped", skipped}, {"tallies", tallies},
           {"ok", report.ok()}};
  if (include_timing) {
    Json timing = Json::object();
    for (const auto& t : report.timing) timing[t.phase + "_ms"] = t.milliseconds;
    out["timing"] = timing;
  }
  return out;
}

std::string emit_json(const Json& j) { return j.dump() + "\n"; }

}  // namespace regionkit
