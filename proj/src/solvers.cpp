#include "regionkit/solvers.hpp"

#include <algorithm>

#include "bitgraph.hpp"

namespace regionkit {

using detail::BitGraph;
using detail::bit;
using detail::lowest;
using detail::Mask;
using detail::popcount;

namespace {

// ---------------------------------------------------------------------------
// Clique

class CliqueSearch {
 public:
  explicit CliqueSearch(const BitGraph& g) : g_(g) {}

  Mask run() {
    const Mask all = g_.size() == 64 ? ~Mask{0} : bit(g_.size()) - 1;
    expand(0, all);
    return best_;
  }

 private:
  void expand(Mask current, Mask candidates) {
    if (candidates == 0) {
      if (popcount(current) > popcount(best_)) best_ = current;
      return;
    }
    while (candidates != 0) {
      if (popcount(current) + popcount(candidates) <= popcount(best_)) return;
      const int v = lowest(candidates);
      expand(current | bit(v), candidates & g_.adj[v]);
      candidates &= ~bit(v);
    }
  }

  const BitGraph& g_;
  Mask best_ = 0;
};

// ---------------------------------------------------------------------------
// DSATUR branch and bound

class DsaturSearch {
 public:
  explicit DsaturSearch(const BitGraph& g) : g_(g), n_(g.size()), color_(n_, -1) {}

  std::vector<int> run(int lower_bound) {
    lower_bound_ = lower_bound;
    best_ = static_cast<int>(n_) + 1;
    classes_.assign(n_ + 1, 0);
    greedy();
    if (best_ > lower_bound_) {
      std::fill(color_.begin(), color_.end(), -1);
      std::fill(classes_.begin(), classes_.end(), 0);
      branch(0, 0);
    }
    return best_coloring_;
  }

 private:
  int saturation(std::size_t v, int used) const {
    int sat = 0;
    for (int c = 0; c < used; ++c) sat += (g_.adj[v] & classes_[c]) != 0 ? 1 : 0;
    return sat;
  }

  // Uncolored vertex with maximum saturation, then maximum degree into the
  // uncolored part, then lowest index.
  std::size_t select(int used) const {
    Mask uncolored = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (color_[v] < 0) uncolored |= bit(v);
    std::size_t chosen = n_;
    int best_sat = -1;
    int best_deg = -1;
    for (Mask m = uncolored; m != 0; m &= m - 1) {
      const auto v = static_cast<std::size_t>(lowest(m));
      const int sat = saturation(v, used);
      const int deg = popcount(g_.adj[v] & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        chosen = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return chosen;
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    classes_[c] |= bit(v);
  }
  void unassign(std::size_t v) {
    classes_[color_[v]] &= ~bit(v);
    color_[v] = -1;
  }

  void greedy() {
    int used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const std::size_t v = select(used);
      int c = 0;
      while (c < used && (g_.adj[v] & classes_[c]) != 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    best_ = used;
    best_coloring_ = color_;
  }

  void branch(std::size_t colored, int used) {
    if (colored == n_) {
      if (used < best_) {
        best_ = used;
        best_coloring_ = color_;
      }
      return;
    }
    const std::size_t v = select(used);
    for (int c = 0; c < used; ++c) {
      if ((g_.adj[v] & classes_[c]) != 0) continue;
      assign(v, c);
      branch(colored + 1, used);
      unassign(v);
      if (best_ <= lower_bound_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      branch(colored + 1, used + 1);
      unassign(v);
    }
  }

  const BitGraph& g_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<Mask> classes_;
  std::vector<int> best_coloring_;
  int best_ = 0;
  int lower_bound_ = 0;
};

// ---------------------------------------------------------------------------
// Branch-set search for complete region families

class BranchSetSearch {
 public:
  BranchSetSearch(const BitGraph& g, std::size_t target)
      : g_(g), n_(g.size()), target_(target), sets_(target, 0) {}

  std::optional<std::vector<Mask>> run() {
    if (target_ == 0) return std::vector<Mask>{};
    if (target_ > n_) return std::nullopt;
    // Crossing edges alone need target(target-1)/2 edges.
    std::size_t edges = 0;
    for (Mask m : g_.adj) edges += static_cast<std::size_t>(popcount(m));
    if (edges / 2 < target_ * (target_ - 1) / 2) return std::nullopt;
    if (descend(0)) return sets_;
    return std::nullopt;
  }

 private:
  Mask undecided_from(std::size_t v) const {
    if (v >= n_) return 0;
    const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    return all & ~(bit(v) - 1);
  }

  bool complete_now() const {
    for (std::size_t i = 0; i < target_; ++i) {
      if (!g_.connected(sets_[i])) return false;
    }
    for (std::size_t i = 0; i < target_; ++i) {
      const Mask reach = g_.neighborhood(sets_[i]);
      for (std::size_t j = i + 1; j < target_; ++j)
        if ((reach & sets_[j]) == 0) return false;
    }
    return true;
  }

  bool feasible(std::size_t v) {
    const Mask undecided = undecided_from(v);
    const std::size_t pending = target_ - open_;
    if (static_cast<std::size_t>(popcount(undecided)) < pending) return false;
    for (std::size_t i = 0; i < open_; ++i) {
      const Mask reach =
          g_.flood(bit(static_cast<std::size_t>(lowest(sets_[i]))), sets_[i] | undecided);
      if ((sets_[i] & ~reach) != 0) return false;
      potential_[i] = reach;
      touch_[i] = g_.neighborhood(reach);
      if (pending > 0 && (touch_[i] & undecided) == 0) return false;
    }
    for (std::size_t i = 0; i < open_; ++i)
      for (std::size_t j = i + 1; j < open_; ++j)
        if ((touch_[i] & potential_[j]) == 0) return false;
    return true;
  }

  bool descend(std::size_t v) {
    if (open_ == target_ && complete_now()) return true;
    if (v == n_) return false;
    if (!feasible(v)) return false;

    const Mask b = bit(v);
    if (open_ < target_) {
      sets_[open_++] |= b;
      if (descend(v + 1)) return true;
      sets_[--open_] &= ~b;
    }
    for (std::size_t i = 0; i < open_; ++i) {
      sets_[i] |= b;
      if (descend(v + 1)) return true;
      sets_[i] &= ~b;
    }
    return descend(v + 1);
  }

  const BitGraph& g_;
  std::size_t n_;
  std::size_t target_;
  std::vector<Mask> sets_;
  std::size_t open_ = 0;
  Mask potential_[64] = {};
  Mask touch_[64] = {};
};

RegionFamily to_family(std::span<const Mask> sets, std::span<const Vertex> original) {
  RegionFamily fam;
  for (Mask s : sets) {
    Region r;
    for (Mask m = s; m != 0; m &= m - 1) r.vertices.push_back(original[lowest(m)]);
    std::sort(r.vertices.begin(), r.vertices.end());
    fam.regions.push_back(std::move(r));
  }
  return fam;
}

}  // namespace

std::size_t clique_number(const Graph& g, const SolverLimits& limits) {
  std::size_t best = 0;
  for (const auto& comp : connected_components(g)) {
    const BitGraph bg = detail::make_bitgraph(g, comp, limits.max_component_vertices, "clique_number");
    best = std::max(best, static_cast<std::size_t>(popcount(CliqueSearch(bg).run())));
  }
  return best;
}

ChromaticResult chromatic_number(const Graph& g, const SolverLimits& limits) {
  ChromaticResult result;
  std::vector<std::size_t> colors(g.vertex_count(), 0);
  for (const auto& comp : connected_components(g)) {
    const BitGraph bg = detail::make_bitgraph(g, comp, limits.max_component_vertices, "chromatic_number");
    const int lower = popcount(CliqueSearch(bg).run());
    const std::vector<int> local = DsaturSearch(bg).run(lower);
    // Renumber by first appearance in vertex order.
    std::vector<int> rename(comp.size() + 1, -1);
    int next = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      int& r = rename[static_cast<std::size_t>(local[i])];
      if (r < 0) r = next++;
      colors[comp[i]] = static_cast<std::size_t>(r);
    }
    result.value = std::max(result.value, static_cast<std::size_t>(next));
  }
  result.certificate = Coloring(std::move(colors));
  return result;
}

std::optional<RegionFamily> find_complete_family(const Graph& g, std::size_t n,
                                                 const SolverLimits& limits) {
  if (n == 0) return RegionFamily{};
  if (g.vertex_count() == 0) return std::nullopt;
  if (n == 1) return RegionFamily{{Region{{0}}}};
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < n) continue;
    const BitGraph bg =
        detail::make_bitgraph(g, comp, limits.max_component_vertices, "find_complete_family");
    if (auto sets = BranchSetSearch(bg, n).run()) return to_family(*sets, comp);
  }
  return std::nullopt;
}

CompleteNumberResult complete_number(const Graph& g, const SolverLimits& limits) {
  CompleteNumberResult best;
  for (const auto& comp : connected_components(g)) {
    const BitGraph bg = detail::make_bitgraph(g, comp, limits.max_component_vertices, "complete_number");
    const Mask clique = CliqueSearch(bg).run();
    std::vector<Mask> witness;
    for (Mask m = clique; m != 0; m &= m - 1) witness.push_back(bit(lowest(m)));
    for (std::size_t n = witness.size() + 1; n <= comp.size(); ++n) {
      auto sets = BranchSetSearch(bg, n).run();
      if (!sets) break;
      witness = std::move(*sets);
    }
    if (witness.size() > best.value) {
      best.value = witness.size();
      best.certificate = to_family(witness, comp);
    }
  }
  return best;
}

HadwigerCheck hadwiger_check(const Graph& g, const SolverLimits& limits) {
  HadwigerCheck out;
  out.chi = chromatic_number(g, limits).value;
  out.h = complete_number(g, limits).value;
  out.holds = out.chi <= out.h;
  return out;
}

}  // namespace regionkit
