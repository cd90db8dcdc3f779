#include "maxecd/greedy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace maxecd {

namespace {

struct BfsTree {
  std::vector<int> parent;       // parent vertex, -1 at root/unreached
  std::vector<int> parent_edge;  // edge index to parent
  std::vector<int> depth;        // -1 if unreached
};

BfsTree bfs(const Graph& g, const std::vector<char>& alive, int root) {
  BfsTree t;
  t.parent.assign(g.n, -1);
  t.parent_edge.assign(g.n, -1);
  t.depth.assign(g.n, -1);
  t.depth[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [w, e] : g.adj[v]) {
      if (!alive[e] || t.depth[w] >= 0) continue;
      t.depth[w] = t.depth[v] + 1;
      t.parent[w] = v;
      t.parent_edge[w] = e;
      queue.push_back(w);
    }
  }
  return t;
}

// Walks both endpoints up to their lowest common ancestor and returns the
// cycle a .. lca .. b closed by the non-tree edge (a, b).
Cycle fundamental_cycle(const Graph& g, const BfsTree& t, int a, int b) {
  std::vector<int> up_a{a}, up_b{b};
  int x = a, y = b;
  while (t.depth[x] > t.depth[y]) {
    x = t.parent[x];
    up_a.push_back(x);
  }
  while (t.depth[y] > t.depth[x]) {
    y = t.parent[y];
    up_b.push_back(y);
  }
  while (x != y) {
    x = t.parent[x];
    y = t.parent[y];
    up_a.push_back(x);
    up_b.push_back(y);
  }
  // up_a ends at the LCA; append b's side below it in reverse.
  std::vector<int> verts = up_a;
  for (std::size_t i = up_b.size() - 1; i-- > 0;) verts.push_back(up_b[i]);
  return make_cycle(g, std::move(verts));
}

}  // namespace

Cycle min_fundamental_cycle(const Graph& g, const std::vector<char>& alive,
                            int root) {
  BfsTree t = bfs(g, alive, root);
  int best_len = -1;
  int best_edge = -1;
  for (int e = 0; e < g.m(); ++e) {
    if (!alive[e]) continue;
    auto [u, v] = g.edges[e];
    if (t.depth[u] < 0 || t.depth[v] < 0) continue;
    if (t.parent_edge[u] == e || t.parent_edge[v] == e) continue;  // tree edge
    // Cycle length via the meet point: depth(u) + depth(v) - 2 depth(lca) + 1.
    int x = u, y = v;
    while (t.depth[x] > t.depth[y]) x = t.parent[x];
    while (t.depth[y] > t.depth[x]) y = t.parent[y];
    while (x != y) {
      x = t.parent[x];
      y = t.parent[y];
    }
    int len = t.depth[u] + t.depth[v] - 2 * t.depth[x] + 1;
    if (best_len < 0 || len < best_len) {
      best_len = len;
      best_edge = e;
    }
  }
  if (best_edge < 0)
    throw std::runtime_error("no cycle reachable from root " +
                             std::to_string(root));
  auto [u, v] = g.edges[best_edge];
  return fundamental_cycle(g, t, u, v);
}

Cycle min_fundamental_cycle(const Graph& g, int root) {
  return min_fundamental_cycle(g, std::vector<char>(g.m(), 1), root);
}

Decomposition greedy_decomposition(const Graph& g, std::vector<char> alive,
                                   Rng& rng) {
  std::vector<int> residual(g.n, 0);
  int edges_left = 0;
  for (int e = 0; e < g.m(); ++e) {
    if (!alive[e]) continue;
    ++edges_left;
    ++residual[g.edges[e].first];
    ++residual[g.edges[e].second];
  }
  for (int v = 0; v < g.n; ++v)
    if (residual[v] % 2 != 0)
      throw std::invalid_argument("greedy requires even residual degrees");

  Decomposition out;
  std::vector<int> live;
  while (edges_left > 0) {
    live.clear();
    for (int v = 0; v < g.n; ++v)
      if (residual[v] > 0) live.push_back(v);
    int root = live[rng.uniform_index(live.size())];
    Cycle c = min_fundamental_cycle(g, alive, root);
    for (int e : c.edge_indices) {
      alive[e] = 0;
      --residual[g.edges[e].first];
      --residual[g.edges[e].second];
      --edges_left;
    }
    out.cycles.push_back(std::move(c));
  }
  return out;
}

Decomposition greedy_decomposition(const Graph& g, Rng& rng) {
  if (!is_eulerian_instance(g))
    throw std::invalid_argument("greedy requires an Eulerian instance");
  return greedy_decomposition(g, std::vector<char>(g.m(), 1), rng);
}

}  // namespace maxecd
