#pragma once

// Test-only helpers: an independent exact cycle oracle (subset DP, no code
// shared with the production detector) and small host-graph builders.

#include <cstdint>
#include <vector>

#include "gforge/coloring.hpp"
#include "gforge/cycles.hpp"

namespace gforge::test {

// Exact: does h contain a cycle of exactly length L? Held-Karp style DP per
// anchor (the cycle's minimum vertex): dp[mask][v] = a simple path from the
// anchor to v spanning exactly mask. Usable up to ~12 vertices.
inline bool oracle_has_cycle(const ColorSubgraph& h, int L) {
  const int m = h.vertex_count();
  if (L < 3 || L > m) return false;
  for (int a = 0; a < m; ++a) {
    const int n = m - a;  // vertices a..m-1, relabeled 0..n-1
    const std::uint32_t full = 1u << n;
    std::vector<std::uint32_t> dp(static_cast<std::size_t>(full) * n, 0);
    auto at = [&](std::uint32_t mask, int v) -> std::uint32_t& {
      return dp[static_cast<std::size_t>(mask) * n + v];
    };
    at(1u, 0) = 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      if (!(mask & 1u)) continue;
      const int pc = __builtin_popcount(mask);
      if (pc > L) continue;
      for (int v = 0; v < n; ++v) {
        if (!((mask >> v) & 1) || !at(mask, v)) continue;
        if (pc == L) {
          if (v != 0 && h.has_edge(a + v, a)) return true;
          continue;
        }
        for (int w : h.neighbors(a + v)) {
          if (w < a) continue;
          const int wi = w - a;
          if ((mask >> wi) & 1) continue;
          at(mask | (1u << wi), wi) = 1;
        }
      }
    }
  }
  return false;
}

// Graph on m vertices from an edge bitmask in pair-index order.
inline ColorSubgraph graph_from_mask(int m, std::uint64_t mask) {
  ColorSubgraph h(m);
  std::size_t e = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j, ++e)
      if ((mask >> e) & 1) h.add_edge(i, j);
  return h;
}

// Complete multipartite host, vertices part-contiguous.
inline ColorSubgraph multipartite_host(const std::vector<int>& sizes) {
  int m = 0;
  for (int s : sizes) m += s;
  ColorSubgraph h(m);
  std::vector<int> part(m);
  int v = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p)
    for (int t = 0; t < sizes[p]; ++t) part[v++] = static_cast<int>(p);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (part[i] != part[j]) h.add_edge(i, j);
  return h;
}

// Host for weave_join_cycle: complete join of Y and Z, plus either an extra
// vertex x joined to everything or the single internal edge z1z2.
inline ColorSubgraph weave_host(int sizeY, int sizeZ, WeaveMode mode) {
  const bool extra = mode == WeaveMode::ExtraVertex;
  const int m = sizeY + sizeZ + (extra ? 1 : 0);
  ColorSubgraph h(m);
  for (int y = 0; y < sizeY; ++y)
    for (int z = sizeY; z < sizeY + sizeZ; ++z) h.add_edge(y, z);
  if (extra) {
    const int x = sizeY + sizeZ;
    for (int v = 0; v < x; ++v) h.add_edge(v, x);
  } else {
    h.add_edge(sizeY, sizeY + 1);  // z1 z2
  }
  return h;
}

// All compositions (ordered part-size sequences) of total into parts of size
// in [1, maxPart], with at least minParts parts.
inline std::vector<std::vector<int>> compositions(int total, int maxPart,
                                                  int minParts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      if (static_cast<int>(cur.size()) >= minParts) out.push_back(cur);
      return;
    }
    for (int s = 1; s <= std::min(maxPart, rest); ++s) {
      cur.push_back(s);
      self(self, rest - s);
      cur.pop_back();
    }
  };
  rec(rec, total);
  return out;
}

}  // namespace gforge::test
