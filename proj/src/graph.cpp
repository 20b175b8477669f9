#include "regionkit/graph.hpp"

#include <algorithm>
#include <string>

#include "regionkit/errors.hpp"

namespace regionkit {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " has an endpoint outside 0.." + std::to_string(vertex_count));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency_.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
    edges.push_back({i, i + 5});
  }
  return Graph(10, edges);
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& comp = out.emplace_back();
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
      if (it != vertices.end() && *it == w) {
        const auto j = static_cast<std::size_t>(it - vertices.begin());
        if (i < j) edges.push_back({i, j});
      }
    }
  }
  return Graph(vertices.size(), edges);
}

namespace {

void check_in_range(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v >= g.vertex_count()) {
      throw InputError("vertex " + std::to_string(v) + " out of range for graph on " +
                       std::to_string(g.vertex_count()) + " vertices");
    }
  }
}

}  // namespace

bool is_connected_subset(const Graph& g, std::span<const Vertex> s) {
  check_in_range(g, s);
  if (s.empty()) return false;
  std::vector<char> member(g.vertex_count(), 0);
  for (Vertex v : s) member[v] = 1;
  std::vector<Vertex> stack{s.front()};
  member[s.front()] = 2;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v)) {
      if (member[w] == 1) {
        member[w] = 2;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (char m : member) distinct += m != 0 ? 1 : 0;
  return reached == distinct;
}

void validate_family(const Graph& g, const RegionFamily& family) {
  std::vector<long> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < family.regions.size(); ++i) {
    const auto& verts = family.regions[i].vertices;
    check_in_range(g, verts);
    if (verts.empty()) throw InputError("region " + std::to_string(i) + " is empty");
    if (!is_connected_subset(g, verts)) {
      throw InputError("region " + std::to_string(i) + " is not connected");
    }
    for (Vertex v : verts) {
      if (owner[v] >= 0) {
        throw InputError("regions " + std::to_string(owner[v]) + " and " + std::to_string(i) +
                         " share vertex " + std::to_string(v));
      }
      owner[v] = static_cast<long>(i);
    }
  }
}

bool regions_adjacent(const Graph& g, const Region& a, const Region& b) {
  validate_family(g, RegionFamily{{a, b}});
  for (Vertex v : a.vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (std::binary_search(b.vertices.begin(), b.vertices.end(), w)) return true;
    }
  }
  return false;
}

Graph contract_family(const Graph& g, const RegionFamily& family) {
  validate_family(g, family);
  constexpr std::size_t kUnowned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(g.vertex_count(), kUnowned);
  for (std::size_t i = 0; i < family.regions.size(); ++i)
    for (Vertex v : family.regions[i].vertices) owner[v] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const auto a = owner[e.u];
    const auto b = owner[e.v];
    if (a != kUnowned && b != kUnowned && a != b) edges.push_back({a, b});
  }
  return Graph(family.regions.size(), edges);
}

bool is_complete_region_family(const Graph& g, const RegionFamily& family) {
  return is_complete(contract_family(g, family));
}

Coloring::Coloring(std::vector<std::size_t> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) return;
  palette_size_ = *std::max_element(colors_.begin(), colors_.end()) + 1;
  std::vector<bool> used(palette_size_, false);
  for (auto c : colors_) used[c] = true;
  for (std::size_t c = 0; c < palette_size_; ++c) {
    if (!used[c]) throw InputError("color " + std::to_string(c) + " is unused; palette must be dense");
  }
}

namespace {

void check_length(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw InputError("coloring has " + std::to_string(c.size()) + " entries for " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

Graph quotient_by_coloring(const Graph& g, const Coloring& c) {
  check_length(g, c);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (c[e.u] != c[e.v]) edges.push_back({c[e.u], c[e.v]});
  }
  return Graph(c.palette_size(), edges);
}

bool is_proper(const Graph& g, const Coloring& c) {
  check_length(g, c);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return c[e.u] == c[e.v]; });
}

}  // namespace regionkit
