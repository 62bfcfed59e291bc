#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gforge {

/// Colors are 1-indexed; 0 is reserved as "unassigned" for partial
/// colorings inside the search module.
using ColorId = int;

/// A k-coloring of the edges of the complete graph K_m.
///
/// Vertices are 0..m-1. Storage is the upper triangle in row-major
/// order: the slot of the pair {i,j}, i<j, is i*m - i*(i+1)/2 + (j-i-1).
/// Immutable after construction; safe to share across threads.
class EdgeColoring {
 public:
  EdgeColoring(int m, int k, std::vector<ColorId> colors);

  static EdgeColoring uniform(int m, int k, ColorId c);

  int vertex_count() const { return m_; }
  int color_count() const { return k_; }

  ColorId color(int i, int j) const { return colors_[pair_index(i, j, m_)]; }

  static std::size_t pair_index(int i, int j, int m);
  static std::size_t pair_count(int m) {
    return static_cast<std::size_t>(m) * (m - 1) / 2;
  }

  const std::vector<ColorId>& colors() const { return colors_; }

  bool operator==(const EdgeColoring&) const = default;

 private:
  int m_;
  int k_;
  std::vector<ColorId> colors_;
};

/// The edge set of one color class, as an adjacency matrix plus
/// neighbor lists. Built once, then read-only.
class ColorSubgraph {
 public:
  explicit ColorSubgraph(int m);

  int vertex_count() const { return m_; }
  bool has_edge(int i, int j) const { return adj_[idx(i, j)] != 0; }
  void add_edge(int i, int j);
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * m_ + j;
  }
  int m_;
  std::size_t edge_count_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<int>> nbrs_;
};

/// Extracts the color class E_c of g.
ColorSubgraph color_subgraph(const EdgeColoring& g, ColorId c);

/// Blow-up: replaces vertex i of base by inserts[i], keeping inserts[i]'s
/// colors inside block i and base.color(i,j) between blocks. Blocks occupy
/// contiguous vertex ranges in base-vertex order (prefix sums of sizes).
EdgeColoring substitute(const EdgeColoring& base,
                        std::span<const EdgeColoring> inserts);

/// Random rainbow-triangle-free coloring of K_m, deterministic in
/// (m, k, seed). Built by recursive substitution into 2-colored bases,
/// which can only produce Gallai colorings.
EdgeColoring random_gallai(int m, int k, std::uint64_t seed);

}  // namespace gforge
