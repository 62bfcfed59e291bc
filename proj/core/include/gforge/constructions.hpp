#pragma once

#include <optional>

#include "gforge/coloring.hpp"

namespace gforge {

/// The pair (n, k): half-length of the target cycle C_{2n+1} and number of
/// colors. Requires n >= 2, k >= 1.
struct WitnessParams {
  int n;
  int k;
};

/// The recursive two-copy-join lower-bound witness on n * 2^k vertices:
/// level 1 is K_{2n} in color 1; level i doubles level i-1 with all cross
/// edges colored i. Rainbow-free and free of monochromatic C_{2n+1}, so it
/// certifies GR_k(C_{2n+1}) >= n * 2^k + 1.
EdgeColoring efrs_witness(WitnessParams p);

/// The classical two-color witness on 4n vertices: red inside each of two
/// 2n-vertex halves, blue between. Equals efrs_witness(n, 2).
EdgeColoring two_color_cycle_witness(int n);

struct GrBounds {
  long long lower;                 // n * 2^k + 1
  double upper;                    // (2^{k+3} - 3) * n * ln n
  std::optional<long long> exact;  // known for n in {2,3,4,5}
};

GrBounds gr_bounds(WitnessParams p);

}  // namespace gforge
