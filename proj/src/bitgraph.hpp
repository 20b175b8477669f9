#pragma once

// 64-bit adjacency kernels shared by the exact solvers.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regionkit/errors.hpp"
#include "regionkit/graph.hpp"

namespace regionkit::detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int popcount(Mask m) { return std::popcount(m); }

struct BitGraph {
  std::vector<Mask> adj;

  std::size_t size() const { return adj.size(); }

  Mask neighborhood(Mask set) const {
    Mask out = 0;
    for (Mask m = set; m != 0; m &= m - 1) out |= adj[static_cast<std::size_t>(lowest(m))];
    return out;
  }

  /// Vertices reachable from `seed` moving only through `allowed`.
  Mask flood(Mask seed, Mask allowed) const {
    Mask reach = seed;
    Mask frontier = seed;
    while (frontier != 0) {
      const Mask next = neighborhood(frontier) & allowed & ~reach;
      reach |= next;
      frontier = next;
    }
    return reach;
  }

  bool connected(Mask set) const {
    return set != 0 && flood(bit(static_cast<std::size_t>(lowest(set))), set) == set;
  }
};

/// Bitset view of the subgraph induced on `vertices` (local index = position).
inline BitGraph make_bitgraph(const Graph& g, std::span<const Vertex> vertices,
                              std::size_t capacity, const char* who) {
  if (vertices.size() > capacity || vertices.size() > 64) {
    throw CapacityError(std::string(who) + ": component with " + std::to_string(vertices.size()) +
                        " vertices exceeds the limit of " +
                        std::to_string(capacity < 64 ? capacity : 64));
  }
  const Graph sub = induced_subgraph(g, vertices);
  BitGraph bg;
  bg.adj.assign(sub.vertex_count(), 0);
  for (const Edge& e : sub.edges()) {
    bg.adj[e.u] |= bit(e.v);
    bg.adj[e.v] |= bit(e.u);
  }
  return bg;
}

}  // namespace regionkit::detail
