#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace regionkit {

using Vertex = std::size_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
///
/// Immutable after construction. Edges are normalized to u < v, sorted and
/// deduplicated; self-loops and out-of-range endpoints are rejected with
/// InputError.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sorted neighbor list of `v`.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Named graphs used throughout tests and fixtures.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();

/// True iff the edge set is exactly all n(n-1)/2 pairs.
bool is_complete(const Graph& g);

/// Connected components, each a sorted vertex list, ordered by lowest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Induced subgraph on `vertices` (sorted, unique); vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected vertex subset of a host graph.
struct Region {
  std::vector<Vertex> vertices;  // sorted, unique

  friend bool operator==(const Region&, const Region&) = default;
};

/// Ordered list of regions in a host graph. A family is *complete* when
/// every pair of its regions is adjacent.
struct RegionFamily {
  std::vector<Region> regions;

  std::size_t size() const noexcept { return regions.size(); }
  friend bool operator==(const RegionFamily&, const RegionFamily&) = default;
};

/// Vertex -> color assignment with dense palette 0..palette_size-1.
class Coloring {
 public:
  Coloring() = default;
  /// Throws InputError when some color in [0, max] is unused.
  explicit Coloring(std::vector<std::size_t> colors);

  std::span<const std::size_t> colors() const noexcept { return colors_; }
  std::size_t palette_size() const noexcept { return palette_size_; }
  std::size_t operator[](Vertex v) const { return colors_.at(v); }
  std::size_t size() const noexcept { return colors_.size(); }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::size_t> colors_;
  std::size_t palette_size_ = 0;
};

/// Induced subgraph of `g` on `s` is connected. Empty set is not connected.
bool is_connected_subset(const Graph& g, std::span<const Vertex> s);

/// At least one edge of `g` joins `a` and `b`. Regions must be connected
/// and disjoint.
bool regions_adjacent(const Graph& g, const Region& a, const Region& b);

/// Throws InputError unless each region is a non-empty connected vertex set
/// of `g` and the regions are pairwise disjoint.
void validate_family(const Graph& g, const RegionFamily& family);

bool is_complete_region_family(const Graph& g, const RegionFamily& family);

/// Graph on family.size() vertices, i -- j iff regions i and j are adjacent.
/// Vertices outside the family are dropped.
Graph contract_family(const Graph& g, const RegionFamily& family);

/// Graph on palette_size vertices, i -- j iff some edge joins colors i and j.
Graph quotient_by_coloring(const Graph& g, const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);

}  // namespace regionkit
