#include "gforge/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace gforge {

namespace {

// BFS distances from src within the vertex set {v >= lo}; -1 = unreachable.
// side[] gets a 2-coloring attempt; odd_component is set when the component
// of src contains an odd cycle.
void bfs_from(const ColorSubgraph& h, int src, int lo, std::vector<int>& dist,
              bool& odd_component) {
  dist.assign(h.vertex_count(), -1);
  odd_component = false;
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : h.neighbors(u)) {
      if (w < lo) continue;
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push(w);
      } else if (((dist[w] ^ dist[u]) & 1) == 0) {
        odd_component = true;  // same BFS parity => odd cycle in component
      }
    }
  }
}

struct CycleDfs {
  const ColorSubgraph& h;
  int L;
  int anchor;
  const std::vector<int>& dist;
  std::vector<char> visited;
  std::vector<int> path;

  bool extend() {
    const int t = static_cast<int>(path.size());
    const int cur = path.back();
    if (t == L) return h.has_edge(cur, anchor);
    for (int w : h.neighbors(cur)) {
      if (w <= anchor || visited[w]) continue;
      if (dist[w] > L - t) continue;  // cannot return to anchor in time
      visited[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      visited[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<CycleWitness> has_cycle_of_length(const ColorSubgraph& h, int L) {
  if (L < 3) throw std::invalid_argument("has_cycle_of_length: L must be >= 3");
  const int m = h.vertex_count();
  if (L > m) return std::nullopt;

  std::vector<int> dist;
  for (int a = 0; a < m; ++a) {
    if (h.degree(a) < 2) continue;
    bool odd_component = false;
    bfs_from(h, a, a, dist, odd_component);
    if ((L & 1) && !odd_component) continue;  // bipartite component, no odd cycle
    int reachable = 0;
    for (int v = a; v < m; ++v) reachable += (dist[v] >= 0);
    if (reachable < L) continue;

    CycleDfs dfs{h, L, a, dist, std::vector<char>(m, 0), {}};
    dfs.visited[a] = 1;
    dfs.path.push_back(a);
    if (dfs.extend()) return CycleWitness{std::move(dfs.path), std::nullopt};
  }
  return std::nullopt;
}

std::optional<std::pair<ColorId, CycleWitness>> find_monochromatic_cycle(
    const EdgeColoring& g, int L) {
  for (ColorId c = 1; c <= g.color_count(); ++c) {
    ColorSubgraph h = color_subgraph(g, c);
    if (auto w = has_cycle_of_length(h, L)) {
      w->color = c;
      return std::make_pair(c, std::move(*w));
    }
  }
  return std::nullopt;
}

CycleWitness multipartite_odd_cycle(const MultipartiteSpec& spec) {
  const int n = spec.n;
  const int l = static_cast<int>(spec.sizes.size());
  if (n < 1) throw std::invalid_argument("multipartite_odd_cycle: n must be >= 1");
  if (l < 3) throw std::invalid_argument("multipartite_odd_cycle: need >= 3 parts");
  long long total = 0;
  for (int s : spec.sizes) {
    if (s < 1) throw std::invalid_argument("multipartite_odd_cycle: part sizes must be positive");
    if (s > n) throw std::invalid_argument("multipartite_odd_cycle: part sizes must be <= n");
    total += s;
  }
  const int target = 2 * n + 1;
  if (total < target)
    throw std::invalid_argument("multipartite_odd_cycle: total size must be >= 2n+1");

  // Trim the largest part first (second-largest when the largest is about to
  // vanish and only 3 parts remain) until exactly 2n+1 vertices are kept.
  std::vector<int> keep = spec.sizes;
  while (total > target) {
    int nonempty = 0;
    for (int s : keep) nonempty += (s > 0);
    int best = -1, second = -1;
    for (int i = 0; i < l; ++i) {
      if (keep[i] == 0) continue;
      if (best == -1 || keep[i] > keep[best])
        second = best, best = i;
      else if (second == -1 || keep[i] > keep[second])
        second = i;
    }
    int pick = best;
    if (keep[best] == 1 && nonempty == 3) pick = second;
    --keep[pick];
    --total;
  }

  // Offsets into the original part-contiguous vertex numbering.
  std::vector<int> offset(l + 1, 0);
  for (int i = 0; i < l; ++i) offset[i + 1] = offset[i] + spec.sizes[i];

  // Kept parts in descending size; vertices listed part-major.
  std::vector<int> order(l);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keep[a] > keep[b]; });
  std::vector<std::pair<int, int>> flat;  // (vertex, part)
  for (int part : order)
    for (int t = 0; t < keep[part]; ++t) flat.emplace_back(offset[part] + t, part);

  // Interleave into even slots 0,2,...,2n then odd slots 1,3,...,2n-1.
  // With max part size <= n and 2n+1 slots no two cyclically adjacent slots
  // land in the same part, so consecutive vertices are always adjacent.
  std::vector<int> cyc(target), cyc_part(target);
  std::size_t f = 0;
  for (int pos = 0; pos < target; pos += 2, ++f)
    cyc[pos] = flat[f].first, cyc_part[pos] = flat[f].second;
  for (int pos = 1; pos < target; pos += 2, ++f)
    cyc[pos] = flat[f].first, cyc_part[pos] = flat[f].second;

  for (int pos = 0; pos < target; ++pos)
    if (cyc_part[pos] == cyc_part[(pos + 1) % target])
      throw std::logic_error("multipartite_odd_cycle: interleaving failed");
  return CycleWitness{std::move(cyc), std::nullopt};
}

CycleWitness weave_join_cycle(int sizeY, int sizeZ, int n, WeaveMode mode) {
  if (n < 1) throw std::invalid_argument("weave_join_cycle: n must be >= 1");
  if (sizeY < n) throw std::invalid_argument("weave_join_cycle: need |Y| >= n");
  const int need_z = (mode == WeaveMode::ExtraVertex) ? n : n + 1;
  if (sizeZ < need_z)
    throw std::invalid_argument("weave_join_cycle: need |Z| >= " +
                                std::to_string(need_z));

  auto y = [&](int i) { return i - 1; };              // y_i, 1-based
  auto z = [&](int i) { return sizeY + (i - 1); };    // z_i, 1-based

  std::vector<int> seq;
  seq.reserve(2 * n + 1);
  if (mode == WeaveMode::ExtraVertex) {
    const int x = sizeY + sizeZ;
    seq = {y(1), x, z(1)};
    for (int i = 2; i <= n; ++i) {
      seq.push_back(y(i));
      seq.push_back(z(i));
    }
  } else {
    seq = {y(1), z(1), z(2)};
    for (int i = 2; i <= n; ++i) {
      seq.push_back(y(i));
      seq.push_back(z(i + 1));
    }
  }
  return CycleWitness{std::move(seq), std::nullopt};
}

namespace {

std::vector<Violation> check_shape(int m, const CycleWitness& w) {
  std::vector<Violation> out;
  const int L = w.length();
  if (L < 3) out.push_back({"cycle length " + std::to_string(L) + " < 3"});
  std::vector<char> seen(m, 0);
  for (int pos = 0; pos < L; ++pos) {
    const int v = w.vertices[pos];
    if (v < 0 || v >= m) {
      out.push_back({"position " + std::to_string(pos) + ": vertex " +
                     std::to_string(v) + " out of range"});
      continue;
    }
    if (seen[v])
      out.push_back({"vertex " + std::to_string(v) + " repeated at position " +
                     std::to_string(pos)});
    seen[v] = 1;
  }
  return out;
}

}  // namespace

std::vector<Violation> verify_cycle_witness(const ColorSubgraph& h,
                                            const CycleWitness& w) {
  std::vector<Violation> out = check_shape(h.vertex_count(), w);
  if (!out.empty()) return out;
  const int L = w.length();
  for (int pos = 0; pos < L; ++pos) {
    const int u = w.vertices[pos], v = w.vertices[(pos + 1) % L];
    if (!h.has_edge(u, v))
      out.push_back({"(" + std::to_string(u) + "," + std::to_string(v) +
                     ") is not an edge of the host"});
  }
  return out;
}

std::vector<Violation> verify_cycle_witness(const EdgeColoring& g,
                                            const CycleWitness& w) {
  std::vector<Violation> out = check_shape(g.vertex_count(), w);
  if (!out.empty()) return out;
  if (!w.color) return out;
  const int L = w.length();
  for (int pos = 0; pos < L; ++pos) {
    const int u = w.vertices[pos], v = w.vertices[(pos + 1) % L];
    if (g.color(u, v) != *w.color)
      out.push_back({"edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has color " + std::to_string(g.color(u, v)) +
                     ", witness claims " + std::to_string(*w.color)});
  }
  return out;
}

}  // namespace gforge
