#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gforge/coloring.hpp"
#include "gforge/gallai.hpp"

namespace gforge {

/// An explicit cycle v0 v1 ... v_{L-1} v0; color is set when the cycle is
/// asserted monochromatic in an EdgeColoring.
struct CycleWitness {
  std::vector<int> vertices;
  std::optional<ColorId> color;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Part sizes of a complete multipartite host plus the half-length n of the
/// target odd cycle C_{2n+1}. Requires l >= 3 parts, every size <= n, and
/// total >= 2n+1.
struct MultipartiteSpec {
  std::vector<int> sizes;
  int n;
};

enum class WeaveMode { ExtraVertex, InternalBlueEdge };

/// Exact detector: a cycle of exactly length L in h, or none.
/// Deterministic: the returned witness comes from the lowest-index anchor.
std::optional<CycleWitness> has_cycle_of_length(const ColorSubgraph& h, int L);

/// Scans colors 1..k in order; first color whose class contains a C_L wins.
std::optional<std::pair<ColorId, CycleWitness>> find_monochromatic_cycle(
    const EdgeColoring& g, int L);

/// Constructs a C_{2n+1} in the complete multipartite graph on the given
/// part sizes (vertices numbered part by part, contiguously): trims to an
/// induced sub-host on exactly 2n+1 vertices with >= 3 parts of size <= n,
/// then lays out a Hamiltonian cycle on it (minimum degree >= n+1 >= |G|/2
/// guarantees one exists).
CycleWitness multipartite_odd_cycle(const MultipartiteSpec& spec);

/// The explicit blue C_{2n+1} threaded through the complete join of Y and Z.
/// Vertices: Y = 0..sizeY-1, Z = sizeY..sizeY+sizeZ-1; in ExtraVertex mode
/// the extra vertex x is sizeY+sizeZ. ExtraVertex yields y1,x,z1,y2,z2,...,
/// yn,zn; InternalBlueEdge (needs sizeZ >= n+1 and the edge z1z2 inside Z)
/// yields y1,z1,z2,y2,z3,...,yn,z_{n+1}.
CycleWitness weave_join_cycle(int sizeY, int sizeZ, int n, WeaveMode mode);

/// Checks witness invariants against a host; empty means valid.
std::vector<Violation> verify_cycle_witness(const ColorSubgraph& h,
                                            const CycleWitness& w);
std::vector<Violation> verify_cycle_witness(const EdgeColoring& g,
                                            const CycleWitness& w);

}  // namespace gforge
