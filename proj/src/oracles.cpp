#include "regionkit/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "regionkit/errors.hpp"

namespace regionkit {

namespace {

void guard(const Graph& g, std::size_t max_n, const char* who) {
  if (g.vertex_count() > max_n) {
    throw CapacityError(std::string(who) + ": " + std::to_string(g.vertex_count()) +
                        " vertices exceeds max_n = " + std::to_string(max_n));
  }
}

// Restricted growth strings: colors[i] <= 1 + max(colors[0..i-1]).
struct PartitionWalk {
  const Graph& g;
  std::vector<std::size_t> colors;
  std::size_t best;

  void walk(std::size_t v, std::size_t blocks) {
    if (blocks >= best) return;
    if (v == colors.size()) {
      best = blocks;
      return;
    }
    for (std::size_t c = 0; c <= blocks; ++c) {
      colors[v] = c;
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && colors[w] == c) {
          clash = true;
          break;
        }
      }
      if (!clash) walk(v + 1, std::max(blocks, c + 1));
    }
  }
};

// Small dense graph: row i holds the neighbors of i as a bitset.
using Rows = std::vector<std::uint16_t>;

std::size_t brute_clique(const Rows& rows) {
  const std::size_t n = rows.size();
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i) {
      if ((subset >> i & 1u) == 0) continue;
      const std::uint32_t others = subset & ~(1u << i);
      clique = (rows[i] & others) == others;
    }
    if (clique) best = size;
  }
  return best;
}

Rows contract(const Rows& rows, std::size_t keep, std::size_t drop) {
  const std::size_t n = rows.size();
  Rows merged = rows;
  merged[keep] = static_cast<std::uint16_t>((merged[keep] | merged[drop]) & ~(1u << keep) & ~(1u << drop));
  for (std::size_t i = 0; i < n; ++i) {
    if (i != keep && (merged[i] >> drop & 1u)) merged[i] |= static_cast<std::uint16_t>(1u << keep);
  }
  Rows out;
  out.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == drop) continue;
    std::uint16_t row = 0;
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == drop) continue;
      if (j != i && (merged[i] >> j & 1u)) row |= static_cast<std::uint16_t>(1u << col);
      ++col;
    }
    out.push_back(row);
  }
  return out;
}

// Relabels vertices by (degree, sorted neighbor degrees, index) and encodes
// the permuted rows. Isomorphic minors usually, not always, share a key;
// equal keys always mean identical graphs.
std::string encode(const Rows& rows) {
  const std::size_t n = rows.size();
  std::vector<int> degree(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = std::popcount(static_cast<unsigned>(rows[i]));
  std::vector<std::vector<int>> signature(n);
  for (std::size_t i = 0; i < n; ++i) {
    signature[i].push_back(degree[i]);
    std::vector<int> nd;
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i] >> j & 1u) nd.push_back(degree[j]);
    std::sort(nd.begin(), nd.end());
    signature[i].insert(signature[i].end(), nd.begin(), nd.end());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return signature[a] < signature[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
  std::string key(1, static_cast<char>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::uint16_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (rows[order[k]] >> j & 1u) row |= static_cast<std::uint16_t>(1u << position[j]);
    key.push_back(static_cast<char>(row & 0xff));
    key.push_back(static_cast<char>(row >> 8));
  }
  return key;
}

struct ContractionRecursion {
  std::map<std::string, std::size_t> memo;

  std::size_t solve(const Rows& rows) {
    const std::string key = encode(rows);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t best = brute_clique(rows);
    for (std::size_t u = 0; u < rows.size(); ++u)
      for (std::size_t v = u + 1; v < rows.size(); ++v)
        if (rows[u] >> v & 1u) best = std::max(best, solve(contract(rows, u, v)));
    memo.emplace(key, best);
    return best;
  }
};

}  // namespace

std::size_t chromatic_oracle(const Graph& g, std::size_t max_n) {
  guard(g, max_n, "chromatic_oracle");
  if (g.vertex_count() == 0) return 0;
  PartitionWalk walk{g, std::vector<std::size_t>(g.vertex_count(), 0), g.vertex_count() + 1};
  walk.walk(0, 0);
  return walk.best;
}

std::size_t complete_number_oracle(const Graph& g, std::size_t max_n) {
  guard(g, max_n, "complete_number_oracle");
  if (g.vertex_count() > 16) throw CapacityError("complete_number_oracle: more than 16 vertices");
  Rows rows(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= static_cast<std::uint16_t>(1u << e.v);
    rows[e.v] |= static_cast<std::uint16_t>(1u << e.u);
  }
  return ContractionRecursion{}.solve(rows);
}

}  // namespace regionkit
