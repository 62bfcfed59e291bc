#include "gforge/gallai.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace gforge {

RainbowTriangleError::RainbowTriangleError(std::array<int, 3> t)
    : std::runtime_error("rainbow triangle at (" + std::to_string(t[0]) + "," +
                         std::to_string(t[1]) + "," + std::to_string(t[2]) + ")"),
      triangle(t) {}

InvalidPartitionError::InvalidPartitionError(std::vector<Violation> v)
    : std::runtime_error("invalid Gallai partition (" + std::to_string(v.size()) +
                         " violations)"),
      violations(std::move(v)) {}

std::optional<std::array<int, 3>> find_rainbow_triangle(const EdgeColoring& g) {
  const int m = g.vertex_count();
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      const ColorId cuv = g.color(u, v);
      for (int w = v + 1; w < m; ++w) {
        const ColorId cuw = g.color(u, w);
        const ColorId cvw = g.color(v, w);
        if (cuv != cuw && cuv != cvw && cuw != cvw)
          return std::array<int, 3>{u, v, w};
      }
    }
  return std::nullopt;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Tries the between-color candidate set S; returns the partition with p > 1
// or nullopt when the merge fixpoint collapses to a single part.
std::optional<GallaiPartition> try_candidate(const EdgeColoring& g,
                                             const std::vector<ColorId>& S) {
  const int m = g.vertex_count();
  auto in_S = [&](ColorId c) {
    return std::find(S.begin(), S.end(), c) != S.end();
  };

  // Components of H = edges colored outside S.
  Dsu dsu(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (!in_S(g.color(u, v))) dsu.unite(u, v);

  // Merge any two parts whose cross edges are not monochromatic, to fixpoint.
  bool merged = true;
  while (merged) {
    merged = false;
    std::unordered_map<std::uint64_t, ColorId> seen;
    for (int u = 0; u < m && !merged; ++u) {
      for (int v = u + 1; v < m; ++v) {
        int ru = dsu.find(u), rv = dsu.find(v);
        if (ru == rv) continue;
        if (ru > rv) std::swap(ru, rv);
        const std::uint64_t key =
            (static_cast<std::uint64_t>(ru) << 32) | static_cast<std::uint32_t>(rv);
        const ColorId c = g.color(u, v);
        auto [it, inserted] = seen.try_emplace(key, c);
        if (!inserted && it->second != c) {
          dsu.unite(ru, rv);
          merged = true;
          break;
        }
      }
    }
  }

  // Collect parts ordered by their smallest vertex.
  std::unordered_map<int, int> root_to_part;
  GallaiPartition P;
  for (int v = 0; v < m; ++v) {
    const int r = dsu.find(v);
    auto [it, inserted] = root_to_part.try_emplace(r, P.part_count());
    if (inserted) P.parts.emplace_back();
    P.parts[it->second].push_back(v);
  }
  const int p = P.part_count();
  if (p <= 1) return std::nullopt;

  P.pair_color.assign(EdgeColoring::pair_count(p), 0);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      const ColorId c = g.color(P.parts[i][0], P.parts[j][0]);
      P.pair_color[EdgeColoring::pair_index(i, j, p)] = c;
      if (std::find(P.between_colors.begin(), P.between_colors.end(), c) ==
          P.between_colors.end())
        P.between_colors.push_back(c);
    }
  std::sort(P.between_colors.begin(), P.between_colors.end());
  return P;
}

}  // namespace

GallaiPartition gallai_partition(const EdgeColoring& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("gallai_partition: need m >= 2");
  if (auto t = find_rainbow_triangle(g)) throw RainbowTriangleError(*t);

  const int k = g.color_count();
  for (ColorId a = 1; a <= k; ++a)
    if (auto P = try_candidate(g, {a})) return *P;
  for (ColorId a = 1; a <= k; ++a)
    for (ColorId b = a + 1; b <= k; ++b)
      if (auto P = try_candidate(g, {a, b})) return *P;

  // Unreachable for Gallai colorings: some candidate pair always succeeds.
  throw std::logic_error("gallai_partition: no candidate produced p > 1");
}

std::vector<Violation> verify_partition(const EdgeColoring& g,
                                        const GallaiPartition& P) {
  std::vector<Violation> out;
  const int m = g.vertex_count();
  const int p = P.part_count();

  std::vector<int> owner(m, -1);
  for (int i = 0; i < p; ++i) {
    if (P.parts[i].empty()) out.push_back({"part " + std::to_string(i) + " is empty"});
    for (int v : P.parts[i]) {
      if (v < 0 || v >= m) {
        out.push_back({"part " + std::to_string(i) + " references invalid vertex " +
                       std::to_string(v)});
        continue;
      }
      if (owner[v] != -1)
        out.push_back({"vertex " + std::to_string(v) + " appears in parts " +
                       std::to_string(owner[v]) + " and " + std::to_string(i)});
      owner[v] = i;
    }
  }
  for (int v = 0; v < m; ++v)
    if (owner[v] == -1)
      out.push_back({"vertex " + std::to_string(v) + " not covered by any part"});
  if (m >= 2 && p <= 1) out.push_back({"partition must have p > 1"});
  if (P.between_colors.size() > 2)
    out.push_back({"more than two between-part colors declared"});
  if (P.pair_color.size() != EdgeColoring::pair_count(p)) {
    out.push_back({"pair_color has wrong size"});
    return out;  // cannot check cross edges against it
  }
  if (!out.empty()) return out;

  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      const ColorId expected = P.pair_color_at(i, j);
      if (std::find(P.between_colors.begin(), P.between_colors.end(), expected) ==
          P.between_colors.end())
        out.push_back({"pair_color(" + std::to_string(i) + "," + std::to_string(j) +
                       ")=" + std::to_string(expected) + " not in between_colors"});
      for (int u : P.parts[i])
        for (int v : P.parts[j])
          if (g.color(u, v) != expected)
            out.push_back({"edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has color " + std::to_string(g.color(u, v)) +
                           ", expected " + std::to_string(expected)});
    }
  return out;
}

EdgeColoring reduced_coloring(const EdgeColoring& g, const GallaiPartition& P) {
  if (auto v = verify_partition(g, P); !v.empty())
    throw InvalidPartitionError(std::move(v));
  const int p = P.part_count();
  if (p == 1) return g;  // singleton partition of K_1
  std::vector<ColorId> colors(EdgeColoring::pair_count(p));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      colors[EdgeColoring::pair_index(i, j, p)] = P.pair_color_at(i, j);
  return EdgeColoring(p, g.color_count(), std::move(colors));
}

}  // namespace gforge
