#pragma once

#include <cstdint>
#include <optional>

#include "gforge/coloring.hpp"

namespace gforge {

struct SearchBudget {
  std::uint64_t max_nodes = 4'000'000'000ULL;  // per worker subtree
  std::int64_t wall_ms = 0;                    // 0 = no time limit
};

/// Does every (optionally Gallai) k-coloring of K_m contain a mono C_L?
struct SearchProblem {
  int m;
  int L;
  int k;
  bool gallai_only = false;
  SearchBudget budget{};
};

enum class SearchOutcome { Verified, Counterexample, BudgetExhausted };

struct PruneCounts {
  std::uint64_t cycle = 0;
  std::uint64_t rainbow = 0;
  std::uint64_t symmetry = 0;
};

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::Verified;
  std::optional<EdgeColoring> counterexample;
  std::uint64_t nodes = 0;
  PruneCounts prunes;
  std::int64_t elapsed_ms = 0;
  bool deterministic = true;  // false when the wall clock cut the run short
};

/// Exhaustive DFS over edge colorings of K_m in lexicographic edge order,
/// with incremental mono-C_L pruning, rainbow pruning (gallai_only) and
/// first-use color symmetry breaking. Outcome and node counts do not depend
/// on the worker count: the tree is split into fixed prefix subtrees, every
/// subtree is processed, and reports merge in prefix order.
SearchReport verify_upper(const SearchProblem& pb, int jobs = 1);

/// A coloring of K_m with no monochromatic C_L (Gallai if requested), if the
/// search finds one within budget. Re-verified by the detector and the
/// rainbow scan before being returned.
std::optional<EdgeColoring> find_good_coloring(const SearchProblem& pb,
                                               int jobs = 1);

}  // namespace gforge
