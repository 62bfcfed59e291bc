#include "gforge/coloring.hpp"

#include <numeric>
#include <random>
#include <string>

namespace gforge {

std::size_t EdgeColoring::pair_index(int i, int j, int m) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * m - static_cast<std::size_t>(i) * (i + 1) / 2 +
         (j - i - 1);
}

EdgeColoring::EdgeColoring(int m, int k, std::vector<ColorId> colors)
    : m_(m), k_(k), colors_(std::move(colors)) {
  if (m < 1) throw std::invalid_argument("EdgeColoring: m must be >= 1");
  if (k < 1) throw std::invalid_argument("EdgeColoring: k must be >= 1");
  if (colors_.size() != pair_count(m))
    throw std::invalid_argument("EdgeColoring: expected " +
                                std::to_string(pair_count(m)) + " colors, got " +
                                std::to_string(colors_.size()));
  for (ColorId c : colors_)
    if (c < 1 || c > k)
      throw std::invalid_argument("EdgeColoring: color " + std::to_string(c) +
                                  " out of range [1," + std::to_string(k) + "]");
}

EdgeColoring EdgeColoring::uniform(int m, int k, ColorId c) {
  if (m < 1) throw std::invalid_argument("uniform: m must be >= 1");
  if (c < 1 || c > k)
    throw std::invalid_argument("uniform: color out of range");
  return EdgeColoring(m, k, std::vector<ColorId>(pair_count(m), c));
}

ColorSubgraph::ColorSubgraph(int m)
    : m_(m), adj_(static_cast<std::size_t>(m) * m, 0), nbrs_(m) {}

void ColorSubgraph::add_edge(int i, int j) {
  if (adj_[idx(i, j)]) return;
  adj_[idx(i, j)] = adj_[idx(j, i)] = 1;
  nbrs_[i].push_back(j);
  nbrs_[j].push_back(i);
  ++edge_count_;
}

ColorSubgraph color_subgraph(const EdgeColoring& g, ColorId c) {
  if (c < 1 || c > g.color_count())
    throw std::invalid_argument("color_subgraph: color out of range");
  ColorSubgraph h(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.color(i, j) == c) h.add_edge(i, j);
  return h;
}

EdgeColoring substitute(const EdgeColoring& base,
                        std::span<const EdgeColoring> inserts) {
  if (static_cast<int>(inserts.size()) != base.vertex_count())
    throw std::invalid_argument("substitute: need one insert per base vertex");
  for (const auto& ins : inserts)
    if (ins.color_count() != base.color_count())
      throw std::invalid_argument("substitute: all k values must match");

  std::vector<int> offset(inserts.size() + 1, 0);
  for (std::size_t b = 0; b < inserts.size(); ++b)
    offset[b + 1] = offset[b] + inserts[b].vertex_count();
  const int m = offset.back();

  std::vector<ColorId> colors(EdgeColoring::pair_count(m));
  // block-of-vertex lookup
  std::vector<int> block(m);
  for (std::size_t b = 0; b < inserts.size(); ++b)
    for (int v = offset[b]; v < offset[b + 1]; ++v) block[v] = static_cast<int>(b);

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int bi = block[i], bj = block[j];
      ColorId c = (bi == bj)
                      ? inserts[bi].color(i - offset[bi], j - offset[bi])
                      : base.color(bi, bj);
      colors[EdgeColoring::pair_index(i, j, m)] = c;
    }
  }
  return EdgeColoring(m, base.color_count(), std::move(colors));
}

namespace {

EdgeColoring random_gallai_rec(int m, int k, std::mt19937_64& rng) {
  if (m == 1) return EdgeColoring::uniform(1, k, 1);
  if (k == 1) return EdgeColoring::uniform(m, 1, 1);

  const int pmax = std::min(5, m);
  std::uniform_int_distribution<int> pick_p(2, pmax);
  const int p = pick_p(rng);

  std::uniform_int_distribution<int> pick_c(1, k);
  const ColorId ca = pick_c(rng);
  const ColorId cb = pick_c(rng);

  // 2-color the K_p base uniformly at random over {ca, cb}.
  std::vector<ColorId> base_colors(EdgeColoring::pair_count(p));
  std::uniform_int_distribution<int> coin(0, 1);
  for (auto& c : base_colors) c = coin(rng) ? ca : cb;
  EdgeColoring base(p, k, std::move(base_colors));

  // Random composition of m into p positive parts.
  std::vector<int> sizes(p, 1);
  for (int rest = m - p; rest > 0; --rest) {
    std::uniform_int_distribution<int> pick(0, p - 1);
    ++sizes[pick(rng)];
  }

  std::vector<EdgeColoring> inserts;
  inserts.reserve(p);
  for (int b = 0; b < p; ++b) inserts.push_back(random_gallai_rec(sizes[b], k, rng));
  return substitute(base, inserts);
}

}  // namespace

EdgeColoring random_gallai(int m, int k, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_gallai: m must be >= 1");
  if (k < 1) throw std::invalid_argument("random_gallai: k must be >= 1");
  std::mt19937_64 rng(seed);
  return random_gallai_rec(m, k, rng);
}

}  // namespace gforge
