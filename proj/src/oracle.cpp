#include "maxecd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace maxecd {

namespace {

void check_guard(const Graph& g) {
  if (g.m() > kOracleMaxEdges)
    throw std::invalid_argument("oracle guard exceeded: m = " +
                                std::to_string(g.m()) + " > " +
                                std::to_string(kOracleMaxEdges));
}

// Extends a path start..v using only vertices above the start label; a
// cycle closes when v neighbors the start. Direction is fixed by requiring
// the second vertex to be smaller than the last, so each cycle appears once.
void extend(const Graph& g, std::vector<int>& path, std::vector<char>& on_path,
            std::vector<Cycle>& out) {
  const int start = path.front();
  const int v = path.back();
  for (auto [w, e] : g.adj[v]) {
    (void)e;
    if (w == start && path.size() >= 3 && path[1] < path.back()) {
      out.push_back(make_cycle(g, path));
      continue;
    }
    if (w <= start || on_path[w]) continue;
    path.push_back(w);
    on_path[w] = 1;
    extend(g, path, on_path, out);
    on_path[w] = 0;
    path.pop_back();
  }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g) {
  check_guard(g);
  std::vector<Cycle> out;
  std::vector<char> on_path(g.n, 0);
  std::vector<int> path;
  for (int s = 0; s < g.n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(g, path, on_path, out);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), cycle_less);
  return out;
}

namespace {

struct Packer {
  const Graph& g;
  std::uint32_t full_mask;
  std::vector<std::uint32_t> cycle_masks;
  std::vector<std::vector<int>> by_edge;  // cycle ids containing each edge
  int best = -1;
  std::vector<int> best_pick;
  std::vector<int> pick;

  void dfs(std::uint32_t covered, int count) {
    if (covered == full_mask) {
      if (count > best) {
        best = count;
        best_pick = pick;
      }
      return;
    }
    int uncovered = std::popcount(full_mask & ~covered);
    if (count + uncovered / 3 <= best) return;
    // Branch on the smallest uncovered edge; every edge must end up in a
    // cycle, so only cycles through it are candidates.
    int e = std::countr_zero(full_mask & ~covered);
    for (int ci : by_edge[e]) {
      if (cycle_masks[ci] & covered) continue;
      pick.push_back(ci);
      dfs(covered | cycle_masks[ci], count + 1);
      pick.pop_back();
    }
  }
};

}  // namespace

std::pair<int, Decomposition> max_decomposition_bruteforce(const Graph& g) {
  check_guard(g);
  if (!is_eulerian_instance(g))
    throw std::invalid_argument("bruteforce requires an Eulerian instance");
  std::vector<Cycle> cycles = enumerate_cycles(g);

  Packer p{g, 0, {}, {}, -1, {}, {}};
  p.full_mask = g.m() == 32 ? ~0u : ((1u << g.m()) - 1u);
  p.by_edge.assign(g.m(), {});
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::uint32_t mask = 0;
    for (int e : cycles[i].edge_indices) mask |= 1u << e;
    p.cycle_masks.push_back(mask);
    for (int e : cycles[i].edge_indices)
      p.by_edge[e].push_back(static_cast<int>(i));
  }
  p.dfs(0, 0);

  Decomposition witness;
  for (int ci : p.best_pick) witness.cycles.push_back(cycles[ci]);
  return {p.best, std::move(witness)};
}

}  // namespace maxecd
