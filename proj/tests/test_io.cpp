#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "regionkit/constructions.hpp"
#include "regionkit/errors.hpp"
#include "regionkit/harness.hpp"
#include "regionkit/io.hpp"
#include "regionkit/solvers.hpp"
#include "test_paths.hpp"

using namespace regionkit;

namespace {

std::size_t parse_offset(const std::string& text) {
  try {
    parse_graph6(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return SIZE_MAX;
}

}  // namespace

TEST(Graph6, Examples) {
  // star centred on vertex 4, as decoded by networkx
  const std::vector<Edge> star{{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  EXPECT_EQ(parse_graph6("D?{"), Graph(5, star));
  EXPECT_EQ(*testoracle::decode_graph6("D?{"), Graph(5, star));
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_EQ(parse_graph6(">>graph6<<D?{\n"), Graph(5, star));
  EXPECT_EQ(to_graph6(petersen_graph()), "IheA@GUAo");
  EXPECT_EQ(parse_graph6(test_data("petersen.g6")), petersen_graph());
}

TEST(Graph6, ErrorOffsets) {
  EXPECT_EQ(parse_offset("D?{x"), 3u);
  EXPECT_EQ(parse_offset("D?"), 2u);
  EXPECT_EQ(parse_offset("Bx"), 1u);  // nonzero padding
  EXPECT_EQ(parse_offset("D? {"), 2u);
  EXPECT_EQ(parse_offset("D?{\n\n"), 3u);
}

TEST(Graph6, RoundTripAllSmallGraphs) {
  for (const Graph& g : all_graphs_upto(6)) {
    const std::string s = to_graph6(g);
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(*testoracle::decode_graph6(s), g);
    EXPECT_EQ(to_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, LongSizeForm) {
  const Graph p = path_graph(70);
  const std::string s = to_graph6(p);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), p);
  EXPECT_EQ(*testoracle::decode_graph6(s), p);
}

TEST(Dimacs, Examples) {
  EXPECT_EQ(parse_dimacs_col("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"), complete_graph(3));
  EXPECT_EQ(parse_dimacs_col("p edge 2 0\n"), Graph(2));
  EXPECT_THROW(parse_dimacs_col("e 1 2\np edge 2 1"), ParseError);
  EXPECT_THROW(parse_dimacs_col("c nothing\n"), ParseError);
  EXPECT_THROW(parse_dimacs_col("p edge 2 1\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse_dimacs_col("p edge 2 1\ne 2 2\n"), ParseError);
  EXPECT_EQ(parse_dimacs_col("p edge 2 2\ne 1 2\ne 2 1\n").edge_count(), 1u);
  EXPECT_EQ(parse_dimacs_col(to_dimacs_col(petersen_graph())), petersen_graph());
}

TEST(GraphText, Sniffing) {
  EXPECT_EQ(parse_graph_text(test_data("triangle.col")), complete_graph(3));
  EXPECT_EQ(parse_graph_text("IheA@GUAo\n"), petersen_graph());
}

TEST(Dot, Examples) {
  EXPECT_EQ(emit_dot(complete_graph(2)), test_data("k2.dot"));
  EXPECT_EQ(emit_dot(Graph(0)), "graph G {\n}\n");
  const Graph p = petersen_graph();
  const std::string colored = emit_dot(p, chromatic_number(p).certificate);
  std::size_t nodes = 0;
  for (std::size_t at = colored.find("fillcolor"); at != std::string::npos; at = colored.find("fillcolor", at + 1)) ++nodes;
  EXPECT_EQ(nodes, 10u);
  for (std::size_t c = 0; c < 3; ++c) {
    const Rgb rgb = palette_rgb(c);
    char hex[8];
    std::snprintf(hex, sizeof hex, "#%02x%02x%02x", rgb.r, rgb.g, rgb.b);
    EXPECT_NE(colored.find(hex), std::string::npos);
  }
  EXPECT_THROW(emit_dot(p, Coloring({0, 1})), InputError);
}

TEST(MapDocument, CanonicalRoundTrip) {
  for (const char* name : {"kn4.json", "kn5.json", "quadrants.json", "line3.json", "kn5_slice_z0.json"}) {
    const std::string text = test_data(name);
    const MapDocument doc = parse_map_document(text);
    EXPECT_EQ(emit_map_document(doc.map, doc.metadata), text) << name;
  }
  EXPECT_EQ(emit_map_document(make_complete_map(4)), test_data("kn4.json"));
}

TEST(MapDocument, Rejects) {
  EXPECT_THROW(parse_map_document("{\"format\":2,\"dims\":[1],\"cells\":[0]}"), ParseError);
  EXPECT_THROW(parse_map_document("{\"format\":1,\"dims\":[2],\"cells\":[0]}"), ParseError);
  EXPECT_THROW(parse_map_document("{\"format\":1,\"dims\":[1],\"cells\":[0],\"x\":1}"), ParseError);
  EXPECT_THROW(parse_map_document("{\"format\":1,\"dims\":[1],\"cells\":[-2]}"), ParseError);
  EXPECT_THROW(parse_map_document("{\"format\":1,"), ParseError);
  EXPECT_THROW(parse_map_document(test_data("diagonal.json")), InputError);
  EXPECT_NO_THROW(parse_map_document(test_data("diagonal.json"), false));
}

TEST(Coloring, Documents) {
  EXPECT_EQ(parse_coloring("{\"colors\":[0,1,0]}").colors().size(), 3u);
  EXPECT_EQ(parse_coloring("[1,0]").palette_size(), 2u);
  EXPECT_THROW(parse_coloring("{\"colours\":[0]}"), ParseError);
  EXPECT_THROW(parse_coloring("[0,-1]"), ParseError);
}

TEST(Json, GraphView) {
  const MapDocument q = parse_map_document(test_data("quadrants.json"));
  EXPECT_EQ(emit_json(graph_to_json(dual_graph(q.map))), test_data("quadrants_dual.json"));
}

TEST(Json, ReportTimingIsSeparable) {
  PlanarSweepConfig c;
  c.trials = 5;
  const SweepReport r = planar_sweep(c);
  const Json with = report_to_json(r);
  const Json without = report_to_json(r, false);
  EXPECT_TRUE(with.contains("timing"));
  EXPECT_FALSE(without.contains("timing"));
  Json stripped = with;
  stripped.erase("timing");
  EXPECT_EQ(stripped, without);
}
