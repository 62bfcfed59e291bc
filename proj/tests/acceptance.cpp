// End-to-end acceptance suite. Runs the CLI binary (argv[1]) plus direct
// library checks, one pass/fail line per criterion. Exit 0 iff all pass.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gforge/constructions.hpp"
#include "gforge/cycles.hpp"
#include "gforge/gallai.hpp"
#include "gforge/search.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gforge;
using namespace gforge::test;

namespace {

std::string g_cli;
fs::path g_dir;

int run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>>" + (g_dir / "log.txt").string();
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  json j;
  in >> j;
  return j;
}

struct Criterion {
  int id;
  std::string name;
  bool (*fn)();
};

// 1. lower-bound witness grid: gen efrs + verify --gallai exits 0
bool c1() {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= 5; ++k) {
      const fs::path f = g_dir / ("efrs_" + std::to_string(n) + "_" +
                                  std::to_string(k) + ".json");
      if (run("gen efrs --n " + std::to_string(n) + " --k " + std::to_string(k) +
              " -o " + f.string()) != 0)
        return false;
      if (run("verify " + f.string() + " --cycle " + std::to_string(2 * n + 1) +
              " --gallai") != 0)
        return false;
    }
  return true;
}

// helper for the search criteria: run, check exit code, optionally check the
// counterexample re-verifies, and record (outcome,nodes) for determinism
struct SearchRun {
  int exit_code = -1;
  std::string outcome;
  std::uint64_t nodes = 0;
};

SearchRun search_run(int m, int L, int jobs) {
  const fs::path rep = g_dir / ("rep_" + std::to_string(m) + "_" +
                                std::to_string(L) + "_" + std::to_string(jobs) +
                                ".json");
  const fs::path cex = g_dir / ("cex_" + std::to_string(m) + "_" +
                                std::to_string(L) + ".json");
  SearchRun r;
  r.exit_code = run("search --m " + std::to_string(m) + " --cycle " +
                    std::to_string(L) + " --colors 2 --jobs " +
                    std::to_string(jobs) + " -o " + rep.string() +
                    " --counterexample-out " + cex.string());
  const json j = read_json(rep);
  r.outcome = j["outcome"].get<std::string>();
  r.nodes = j["nodes"].get<std::uint64_t>();
  return r;
}

bool counterexample_verifies(int m, int L) {
  const fs::path cex = g_dir / ("cex_" + std::to_string(m) + "_" +
                                std::to_string(L) + ".json");
  return run("verify " + cex.string() + " --cycle " + std::to_string(L)) == 0;
}

// 2. R2(C4) = 6: K6 verified within 2^15 nodes, K5 counterexample re-verifies
bool c2() {
  const SearchRun k6 = search_run(6, 4, 1);
  if (k6.exit_code != 0 || k6.outcome != "verified" || k6.nodes > (1u << 15))
    return false;
  const SearchRun k5 = search_run(5, 4, 1);
  return k5.exit_code == 1 && counterexample_verifies(5, 4);
}

// 3. R2(C6) = 8: K8 verified, K7 counterexample
bool c3() {
  const SearchRun k8 = search_run(8, 6, 8);
  if (k8.exit_code != 0 || k8.outcome != "verified") return false;
  const SearchRun k7 = search_run(7, 6, 8);
  return k7.exit_code == 1 && counterexample_verifies(7, 6);
}

// 4. R2(C3) = 6: K6 verified, K5 counterexample (pentagon pair) re-verifies
bool c4() {
  const SearchRun k6 = search_run(6, 3, 1);
  if (k6.exit_code != 0 || k6.outcome != "verified") return false;
  const SearchRun k5 = search_run(5, 3, 1);
  if (k5.exit_code != 1 || !counterexample_verifies(5, 3)) return false;
  // both color classes of the counterexample are 5-cycles
  std::ifstream in(g_dir / "cex_5_3.json");
  json j;
  in >> j;
  EdgeColoring g(5, 2, j["colors"].get<std::vector<ColorId>>());
  for (ColorId c : {1, 2})
    if (!has_cycle_of_length(color_subgraph(g, c), 5)) return false;
  return true;
}

// 5. two-color witnesses for n in 2..8 are mono-C_{2n+1}-free
bool c5() {
  for (int n = 2; n <= 8; ++n)
    if (find_monochromatic_cycle(two_color_cycle_witness(n), 2 * n + 1))
      return false;
  return true;
}

// 6. >= 1000 random Gallai colorings decompose with p > 1, valid, <= 2 colors
bool c6() {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 1000; ++t) {
    const int m = 2 + static_cast<int>(rng() % 39);  // 2..40
    const int k = 1 + static_cast<int>(rng() % 6);   // 1..6
    const auto g = random_gallai(m, k, rng());
    const auto P = gallai_partition(g);
    if (P.part_count() <= 1) return false;
    if (!verify_partition(g, P).empty()) return false;
    const auto red = reduced_coloring(g, P);
    std::vector<ColorId> used(red.colors());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.size() > 2) return false;
  }
  return true;
}

// 7. every composition of 2n+1 into >= 3 parts of size <= n, n in {4,5}
bool c7() {
  for (int n : {4, 5})
    for (const auto& sizes : compositions(2 * n + 1, n, 3)) {
      const auto w = multipartite_odd_cycle({sizes, n});
      if (w.length() != 2 * n + 1) return false;
      if (!verify_cycle_witness(multipartite_host(sizes), w).empty())
        return false;
    }
  return true;
}

// 8. both weave modes, all sizes within +3 of minimum, n in {4,5}
bool c8() {
  for (int n : {4, 5})
    for (WeaveMode mode : {WeaveMode::ExtraVertex, WeaveMode::InternalBlueEdge}) {
      const int minZ = (mode == WeaveMode::ExtraVertex) ? n : n + 1;
      for (int sy = n; sy <= n + 3; ++sy)
        for (int sz = minZ; sz <= minZ + 3; ++sz) {
          const auto w = weave_join_cycle(sy, sz, n, mode);
          if (w.length() != 2 * n + 1) return false;
          if (!verify_cycle_witness(weave_host(sy, sz, mode), w).empty())
            return false;
        }
    }
  return true;
}

// 9. detector == subset-DP oracle: all graphs on <= 6 vertices, 10^4 random
// graphs on 7..10, all L in [3, m]
bool c9() {
  for (int m = 3; m <= 6; ++m) {
    const std::uint64_t graphs = 1ULL << EdgeColoring::pair_count(m);
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
      const auto h = graph_from_mask(m, mask);
      for (int L = 3; L <= m; ++L)
        if (static_cast<bool>(has_cycle_of_length(h, L)) !=
            oracle_has_cycle(h, L))
          return false;
    }
  }
  std::mt19937_64 rng(77);
  for (int t = 0; t < 10000; ++t) {
    const int m = 7 + static_cast<int>(rng() % 4);
    const auto h = graph_from_mask(m, rng());
    for (int L = 3; L <= m; ++L)
      if (static_cast<bool>(has_cycle_of_length(h, L)) != oracle_has_cycle(h, L))
        return false;
  }
  return true;
}

// 10. criteria 2-4 reruns with --jobs 1 and 8: identical outcomes and nodes
bool c10() {
  for (auto [m, L] : {std::pair{6, 4}, {5, 4}, {8, 6}, {7, 6}, {6, 3}, {5, 3}}) {
    const SearchRun a = search_run(m, L, 1);
    const SearchRun b = search_run(m, L, 8);
    if (a.exit_code != b.exit_code || a.outcome != b.outcome || a.nodes != b.nodes)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <gforge-binary> [scratch-dir]\n";
    return 2;
  }
  g_cli = argv[1];
  g_dir = (argc > 2) ? fs::path(argv[2]) : fs::temp_directory_path() / "gforge-accept";
  fs::create_directories(g_dir);

  const Criterion criteria[] = {
      {1, "lower-bound witness grid (n,k) in {2..5}x{1..5}", c1},
      {2, "R2(C4)=6 search", c2},
      {3, "R2(C6)=8 search", c3},
      {4, "R2(C3)=6 search", c4},
      {5, "two-color odd-cycle witnesses n in 2..8", c5},
      {6, "Gallai partition property suite (1000 random colorings)", c6},
      {7, "multipartite odd-cycle construction, all compositions", c7},
      {8, "weave join cycles, both modes, sizes up to min+3", c8},
      {9, "detector vs oracle equivalence", c9},
      {10, "determinism across --jobs {1,8}", c10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::cout << "criterion " << c.id << ": exception: " << e.what() << "\n";
    }
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " — "
              << c.name << std::endl;
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
