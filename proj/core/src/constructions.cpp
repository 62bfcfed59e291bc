#include "gforge/constructions.hpp"

#include <cmath>

namespace gforge {

namespace {

void check(const WitnessParams& p) {
  if (p.n < 2) throw std::invalid_argument("witness params: n must be >= 2");
  if (p.k < 1) throw std::invalid_argument("witness params: k must be >= 1");
}

}  // namespace

EdgeColoring efrs_witness(WitnessParams p) {
  check(p);
  EdgeColoring level = EdgeColoring::uniform(2 * p.n, p.k, 1);
  for (int i = 2; i <= p.k; ++i) {
    const EdgeColoring base = EdgeColoring::uniform(2, p.k, i);
    const EdgeColoring inserts[] = {level, level};
    level = substitute(base, inserts);
  }
  return level;
}

EdgeColoring two_color_cycle_witness(int n) {
  if (n < 2) throw std::invalid_argument("two_color_cycle_witness: n must be >= 2");
  return efrs_witness({n, 2});
}

GrBounds gr_bounds(WitnessParams p) {
  check(p);
  GrBounds b;
  b.lower = static_cast<long long>(p.n) * (1LL << p.k) + 1;
  b.upper = ((std::pow(2.0, p.k + 3) - 3.0)) * p.n * std::log(p.n);
  if (p.n >= 2 && p.n <= 5) b.exact = b.lower;
  return b;
}

}  // namespace gforge
