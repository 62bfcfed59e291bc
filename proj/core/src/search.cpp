#include "gforge/search.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <random>
#include <thread>
#include <utility>

#include "gforge/cycles.hpp"
#include "gforge/gallai.hpp"

namespace gforge {

namespace {

using Clock = std::chrono::steady_clock;

struct Prefix {
  std::vector<ColorId> assign;  // colors of edges [0, depth)
  int max_color = 0;
};

// One DFS engine over partial colorings of K_m, edges in lexicographic
// (i,j) order. Used both to enumerate prefix subtrees and to exhaust them.
class Engine {
 public:
  Engine(const SearchProblem& pb, Clock::time_point deadline, bool use_deadline)
      : m_(pb.m),
        L_(pb.L),
        k_(pb.k),
        gallai_(pb.gallai_only),
        E_(static_cast<int>(EdgeColoring::pair_count(pb.m))),
        max_nodes_(pb.budget.max_nodes),
        deadline_(deadline),
        use_deadline_(use_deadline),
        assign_(E_, 0),
        adj_(pb.k + 1, std::vector<std::vector<int>>(pb.m)) {
    ep_.reserve(E_);
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j) ep_.emplace_back(i, j);
  }

  void replay_prefix(const Prefix& pre) {
    for (int e = 0; e < static_cast<int>(pre.assign.size()); ++e)
      put(e, pre.assign[e]);
    start_ = static_cast<int>(pre.assign.size());
  }

  // 0 = subtree exhausted with no counterexample, 1 = counterexample found,
  // 2 = budget stop.
  int run(int max_color, int depth_limit, std::vector<Prefix>* sink) {
    depth_limit_ = depth_limit;
    sink_ = sink;
    return dfs(start_, max_color);
  }

  std::uint64_t nodes = 0;
  PruneCounts prunes;
  bool timed_out = false;
  std::optional<std::vector<ColorId>> found;

 private:
  std::size_t idx(int u, int v) const {
    return EdgeColoring::pair_index(u, v, m_);
  }

  void put(int e, ColorId c) {
    auto [u, v] = ep_[e];
    assign_[e] = c;
    adj_[c][u].push_back(v);
    adj_[c][v].push_back(u);
  }
  void take(int e, ColorId c) {
    auto [u, v] = ep_[e];
    assign_[e] = 0;
    adj_[c][u].pop_back();
    adj_[c][v].pop_back();
  }

  // Path of exactly steps edges from cur to target in color c, internal
  // vertices outside visited.
  bool path(ColorId c, int cur, int target, int steps, std::uint64_t visited) {
    if (steps == 1) return assign_[idx(cur, target)] == c;
    for (int w : adj_[c][cur]) {
      if (w == target || (visited >> w) & 1) continue;
      if (path(c, w, target, steps - 1, visited | (1ULL << w))) return true;
    }
    return false;
  }

  bool closes_cycle(int u, int v, ColorId c) {
    return path(c, u, v, L_ - 1, 1ULL << u);
  }

  bool makes_rainbow(int u, int v, ColorId c) const {
    for (int w = 0; w < m_; ++w) {
      if (w == u || w == v) continue;
      const ColorId a = assign_[idx(u, w)];
      const ColorId b = assign_[idx(v, w)];
      if (a && b && a != b && a != c && b != c) return true;
    }
    return false;
  }

  int dfs(int e, int max_color) {
    if (e == depth_limit_ && sink_) {
      sink_->push_back(
          {std::vector<ColorId>(assign_.begin(), assign_.begin() + e), max_color});
      return 0;
    }
    if (e == E_) {
      found = assign_;
      return 1;
    }
    auto [u, v] = ep_[e];
    const int climit = std::min(k_, max_color + 1);
    prunes.symmetry += static_cast<std::uint64_t>(k_ - climit);
    for (ColorId c = 1; c <= climit; ++c) {
      ++nodes;
      if (nodes > max_nodes_) return 2;
      if (use_deadline_ && (nodes & 0xFFFF) == 0 && Clock::now() > deadline_) {
        timed_out = true;
        return 2;
      }
      if (closes_cycle(u, v, c)) {
        ++prunes.cycle;
        continue;
      }
      if (gallai_ && makes_rainbow(u, v, c)) {
        ++prunes.rainbow;
        continue;
      }
      put(e, c);
      const int r = dfs(e + 1, std::max(max_color, c));
      take(e, c);
      if (r) return r;
    }
    return 0;
  }

  int m_, L_, k_;
  bool gallai_;
  int E_;
  std::uint64_t max_nodes_;
  Clock::time_point deadline_;
  bool use_deadline_;
  int start_ = 0;
  int depth_limit_ = -1;
  std::vector<Prefix>* sink_ = nullptr;
  std::vector<std::pair<int, int>> ep_;
  std::vector<ColorId> assign_;
  std::vector<std::vector<std::vector<int>>> adj_;
};

struct TaskResult {
  int status = 0;  // as Engine::run
  std::uint64_t nodes = 0;
  PruneCounts prunes;
  bool timed_out = false;
  std::optional<std::vector<ColorId>> found;
};

}  // namespace

SearchReport verify_upper(const SearchProblem& pb, int jobs) {
  if (pb.m < 3 || pb.m > 64)
    throw std::invalid_argument("verify_upper: m must be in [3, 64]");
  if (pb.L < 3) throw std::invalid_argument("verify_upper: L must be >= 3");
  if (pb.k < 1) throw std::invalid_argument("verify_upper: k must be >= 1");
  if (pb.budget.max_nodes == 0)
    throw std::invalid_argument("verify_upper: node budget must be positive");
  if (jobs < 1) throw std::invalid_argument("verify_upper: jobs must be >= 1");

  const auto t0 = Clock::now();
  const bool use_deadline = pb.budget.wall_ms > 0;
  const auto deadline = t0 + std::chrono::milliseconds(
                                 use_deadline ? pb.budget.wall_ms : 0);

  const int E = static_cast<int>(EdgeColoring::pair_count(pb.m));
  const int split_depth = (E > 8) ? 6 : 0;  // fixed: node counts must not
                                            // depend on the worker count

  SearchReport rep;
  auto finish = [&](SearchReport r) {
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - t0)
                       .count();
    return r;
  };
  auto to_coloring = [&](const std::vector<ColorId>& a) {
    return EdgeColoring(pb.m, pb.k, a);
  };

  if (split_depth == 0) {
    Engine eng(pb, deadline, use_deadline);
    const int status = eng.run(0, -1, nullptr);
    rep.nodes = eng.nodes;
    rep.prunes = eng.prunes;
    if (status == 1) {
      rep.outcome = SearchOutcome::Counterexample;
      rep.counterexample = to_coloring(*eng.found);
    } else if (status == 2) {
      rep.outcome = SearchOutcome::BudgetExhausted;
      rep.deterministic = !eng.timed_out;
    }
    return finish(rep);
  }

  // Phase 1: enumerate surviving prefixes of the first split_depth edges.
  std::vector<Prefix> tasks;
  Engine pre(pb, deadline, use_deadline);
  const int pre_status = pre.run(0, split_depth, &tasks);
  rep.nodes = pre.nodes;
  rep.prunes = pre.prunes;
  if (pre_status == 2) {
    rep.outcome = SearchOutcome::BudgetExhausted;
    rep.deterministic = !pre.timed_out;
    return finish(rep);
  }

  // Phase 2: exhaust every subtree; workers pull tasks, results merge in
  // prefix order.
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      Engine eng(pb, deadline, use_deadline);
      eng.replay_prefix(tasks[t]);
      results[t].status = eng.run(tasks[t].max_color, -1, nullptr);
      results[t].nodes = eng.nodes;
      results[t].prunes = eng.prunes;
      results[t].timed_out = eng.timed_out;
      results[t].found = std::move(eng.found);
    }
  };
  const int nworkers = std::min<std::size_t>(jobs, tasks.size());
  if (nworkers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  bool exhausted = false, timed_out = false;
  for (const auto& r : results) {
    rep.nodes += r.nodes;
    rep.prunes.cycle += r.prunes.cycle;
    rep.prunes.rainbow += r.prunes.rainbow;
    rep.prunes.symmetry += r.prunes.symmetry;
    if (r.status == 2) exhausted = true;
    timed_out = timed_out || r.timed_out;
  }
  for (const auto& r : results)
    if (r.status == 1 && !rep.counterexample) {
      rep.outcome = SearchOutcome::Counterexample;
      rep.counterexample = to_coloring(*r.found);
      break;
    }
  if (!rep.counterexample && exhausted) {
    rep.outcome = SearchOutcome::BudgetExhausted;
    rep.deterministic = !timed_out;
  }
  return finish(rep);
}

namespace {

void reverify(const EdgeColoring& g, const SearchProblem& pb) {
  for (ColorId c = 1; c <= g.color_count(); ++c)
    if (has_cycle_of_length(color_subgraph(g, c), pb.L))
      throw std::logic_error("find_good_coloring: output fails re-verification");
  if (pb.gallai_only && find_rainbow_triangle(g))
    throw std::logic_error("find_good_coloring: output has a rainbow triangle");
}

// Min-conflicts repair: start from a random coloring; while some color class
// contains a C_L, try every recoloring of an edge on one such cycle and keep
// a flip that minimizes the number of remaining violations (with occasional
// random flips to escape plateaus). Deterministic seed, so the result is
// reproducible; failure to converge makes no claim that none exists.
std::optional<EdgeColoring> repair_search(const SearchProblem& pb) {
  std::mt19937_64 rng(0x67666f726765ULL);
  const auto t0 = Clock::now();
  const bool use_deadline = pb.budget.wall_ms > 0;

  auto violations = [&](const std::vector<ColorId>& colors) {
    EdgeColoring g(pb.m, pb.k, colors);
    int v = 0;
    for (ColorId c = 1; c <= pb.k; ++c)
      if (has_cycle_of_length(color_subgraph(g, c), pb.L)) ++v;
    if (pb.gallai_only && find_rainbow_triangle(g)) ++v;
    return v;
  };

  const std::size_t E = EdgeColoring::pair_count(pb.m);
  std::uniform_int_distribution<int> any_color(1, pb.k);
  for (int restart = 0; restart < 20; ++restart) {
    std::vector<ColorId> colors(E);
    for (auto& c : colors) c = any_color(rng);
    for (int step = 0; step < 20000; ++step) {
      if (use_deadline &&
          Clock::now() > t0 + std::chrono::milliseconds(pb.budget.wall_ms))
        return std::nullopt;
      EdgeColoring g(pb.m, pb.k, colors);
      if (pb.gallai_only) {
        if (auto t = find_rainbow_triangle(g)) {
          // recolor one triangle edge to match another; kills this triangle
          const int pick = static_cast<int>(rng() % 3);
          const auto& v = *t;
          const int pairs[3][2] = {{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}};
          colors[EdgeColoring::pair_index(pairs[pick][0], pairs[pick][1], pb.m)] =
              g.color(pairs[(pick + 1) % 3][0], pairs[(pick + 1) % 3][1]);
          continue;
        }
      }
      auto hit = find_monochromatic_cycle(g, pb.L);
      if (!hit) return g;
      const auto& cyc = hit->second.vertices;
      if (rng() % 100 < 5) {  // noise move
        const std::size_t pos = rng() % cyc.size();
        const std::size_t e = EdgeColoring::pair_index(
            cyc[pos], cyc[(pos + 1) % cyc.size()], pb.m);
        ColorId next = any_color(rng);
        if (next == colors[e]) next = next % pb.k + 1;
        colors[e] = next;
        continue;
      }
      int best = std::numeric_limits<int>::max();
      std::vector<std::pair<std::size_t, ColorId>> ties;
      for (std::size_t pos = 0; pos < cyc.size(); ++pos) {
        const std::size_t e = EdgeColoring::pair_index(
            cyc[pos], cyc[(pos + 1) % cyc.size()], pb.m);
        const ColorId old = colors[e];
        for (ColorId c = 1; c <= pb.k; ++c) {
          if (c == old) continue;
          colors[e] = c;
          const int v = violations(colors);
          colors[e] = old;
          if (v < best) {
            best = v;
            ties.clear();
          }
          if (v == best) ties.emplace_back(e, c);
        }
      }
      const auto [e, c] = ties[rng() % ties.size()];
      colors[e] = c;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<EdgeColoring> find_good_coloring(const SearchProblem& pb, int jobs) {
  // Small instances: the exhaustive search is definitive both ways.
  if (EdgeColoring::pair_count(pb.m) <= 21 || pb.k == 1) {
    SearchReport rep = verify_upper(pb, jobs);
    if (rep.outcome != SearchOutcome::Counterexample) return std::nullopt;
    reverify(*rep.counterexample, pb);
    return rep.counterexample;
  }
  auto g = repair_search(pb);
  if (g) reverify(*g, pb);
  return g;
}

}  // namespace gforge
