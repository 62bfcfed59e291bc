#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gforge/coloring.hpp"

namespace gforge {

/// A named check failure; message identifies the offending edge or pair.
struct Violation {
  std::string message;
};

/// Thrown when an operation requiring a Gallai coloring meets a rainbow
/// triangle; carries the witness triple.
class RainbowTriangleError : public std::runtime_error {
 public:
  explicit RainbowTriangleError(std::array<int, 3> t);
  std::array<int, 3> triangle;
};

class InvalidPartitionError : public std::runtime_error {
 public:
  explicit InvalidPartitionError(std::vector<Violation> v);
  std::vector<Violation> violations;
};

/// Partition V_1..V_p of a Gallai-colored K_m: at most two colors appear
/// between parts and each part pair is monochromatic.
struct GallaiPartition {
  std::vector<std::vector<int>> parts;
  std::vector<ColorId> between_colors;  // sorted, size <= 2
  std::vector<ColorId> pair_color;      // upper triangle over part indices

  int part_count() const { return static_cast<int>(parts.size()); }
  ColorId pair_color_at(int i, int j) const {
    return pair_color[EdgeColoring::pair_index(i, j, part_count())];
  }
};

/// Lexicographically first triple (u,v,w), u<v<w, with three distinct edge
/// colors; none if the coloring is Gallai.
std::optional<std::array<int, 3>> find_rainbow_triangle(const EdgeColoring& g);

/// Computes a valid Gallai partition of g (m >= 2, rainbow-free).
///
/// For each candidate between-color set S (singletons, then pairs, both in
/// lexicographic order) the components of the graph of edges colored outside
/// S are taken as provisional parts and merged to a monochromatic-cross
/// fixpoint; the first candidate yielding p > 1 wins.
GallaiPartition gallai_partition(const EdgeColoring& g);

/// Checks every GallaiPartition invariant of P against g; empty means valid.
std::vector<Violation> verify_partition(const EdgeColoring& g,
                                        const GallaiPartition& P);

/// The coloring of K_p induced on one representative per part.
EdgeColoring reduced_coloring(const EdgeColoring& g, const GallaiPartition& P);

}  // namespace gforge
