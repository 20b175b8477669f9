#pragma once

#include <cstddef>
#include <optional>

#include "regionkit/graph.hpp"

namespace regionkit {

/// Size guards for the exact solvers. The bitset kernels address at most
/// 64 vertices per connected component.
struct SolverLimits {
  std::size_t max_component_vertices = 64;
};

struct ChromaticResult {
  std::size_t value = 0;
  Coloring certificate;
};

struct CompleteNumberResult {
  std::size_t value = 0;
  RegionFamily certificate;
};

struct HadwigerCheck {
  std::size_t chi = 0;
  std::size_t h = 0;
  bool holds = true;
};

/// Exact chromatic number by DSATUR branch and bound.
///
/// Components are solved independently; the witness uses colors
/// 0..value-1. Ties are broken by lowest vertex index, so the witness is a
/// function of the graph alone.
ChromaticResult chromatic_number(const Graph& g, const SolverLimits& limits = {});

/// Clique number by simple branch and bound. Used as a lower bound.
std::size_t clique_number(const Graph& g, const SolverLimits& limits = {});

/// Searches for `n` pairwise disjoint, connected, pairwise adjacent regions.
///
/// Vertices are visited in index order; each is discarded, added to an open
/// branch set, or opens the next one. Partial assignments are pruned when a
/// branch set can no longer become connected through undecided vertices or
/// when two branch sets can no longer touch.
std::optional<RegionFamily> find_complete_family(const Graph& g, std::size_t n,
                                                 const SolverLimits& limits = {});

/// Largest n with a complete n-region family (the Hadwiger number), with a
/// witness family. Empty graph gives 0.
CompleteNumberResult complete_number(const Graph& g, const SolverLimits& limits = {});

HadwigerCheck hadwiger_check(const Graph& g, const SolverLimits& limits = {});

}  // namespace regionkit
