#pragma once

#include <cstddef>

#include "regionkit/graph.hpp"

namespace regionkit {

/// Chromatic number by exhaustive enumeration of colorings (one per set
/// partition of the vertices). Throws CapacityError above `max_n` vertices.
std::size_t chromatic_oracle(const Graph& g, std::size_t max_n = 10);

/// Complete (Hadwiger) number by the contraction recursion
/// h(G) = max(clique(G), max over edges e of h(G/e)), memoized on a
/// degree-refined relabeling of each minor. Throws CapacityError above
/// `max_n` vertices.
std::size_t complete_number_oracle(const Graph& g, std::size_t max_n = 9);

}  // namespace regionkit
