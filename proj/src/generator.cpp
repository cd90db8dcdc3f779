#include "maxecd/generator.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace maxecd {

int edge_count_for(int n, double m_fraction) {
  return static_cast<int>(m_fraction * (static_cast<double>(n) * (n - 1) / 2));
}

DegreeSequence random_even_sequence(int n, int m, Rng& rng) {
  if (m < n)
    throw std::invalid_argument("random_even_sequence requires m >= n (got m=" +
                                std::to_string(m) + ", n=" +
                                std::to_string(n) + ")");
  DegreeSequence seq;
  seq.values.assign(n, 2);
  for (int left = m - n; left > 0; --left)
    seq.values[rng.uniform_index(n)] += 2;
  return seq;
}

namespace {

// Highest-degree-first greedy realization; succeeds iff the sequence is
// graphical (Havel-Hakimi).
std::optional<std::vector<std::pair<int, int>>> havel_hakimi(
    const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  std::vector<int> residual = degrees;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (;;) {
    // Stable sort keeps ties in label order, so the construction is
    // deterministic for a given label assignment.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return residual[a] > residual[b];
    });
    int v = order.front();
    int d = residual[v];
    if (d == 0) break;
    if (d > n - 1 || d >= static_cast<int>(order.size())) return std::nullopt;
    residual[v] = 0;
    for (int i = 1; i <= d; ++i) {
      int w = order[i];
      if (residual[w] <= 0) return std::nullopt;
      --residual[w];
      edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  return edges;
}

}  // namespace

std::optional<Graph> hakimi_construct(const DegreeSequence& seq, Rng& rng) {
  const int n = static_cast<int>(seq.values.size());
  // Assign the sequence entries to uniformly permuted labels.
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  std::vector<int> degrees(n);
  for (int i = 0; i < n; ++i) degrees[label[i]] = seq.values[i];

  auto edges = havel_hakimi(degrees);
  if (!edges) return std::nullopt;

  std::set<std::pair<int, int>> edge_set(edges->begin(), edges->end());
  auto has = [&](int a, int b) {
    return edge_set.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  std::vector<std::pair<int, int>> list(edge_set.begin(), edge_set.end());
  const int m = static_cast<int>(list.size());

  // Degree-preserving double-edge swaps; invalid attempts are rejected.
  for (int t = 0; t < 4 * m; ++t) {
    if (m < 2) break;
    std::size_t i = rng.uniform_index(m);
    std::size_t j = rng.uniform_index(m);
    if (i == j) continue;
    auto [a, b] = list[i];
    auto [c, d] = list[j];
    if (rng.uniform_index(2) == 1) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    if (has(a, c) || has(b, d)) continue;
    edge_set.erase({std::min(a, b), std::max(a, b)});
    edge_set.erase({std::min(c, d), std::max(c, d)});
    edge_set.insert({std::min(a, c), std::max(a, c)});
    edge_set.insert({std::min(b, d), std::max(b, d)});
    list[i] = {std::min(a, c), std::max(a, c)};
    list[j] = {std::min(b, d), std::max(b, d)};
  }

  return make_graph(n, {edge_set.begin(), edge_set.end()});
}

Graph merge_components_via(const Graph& g, int edge_a, int edge_b) {
  auto [u, v] = g.edges[edge_a];
  auto [x, y] = g.edges[edge_b];
  auto comp = component_ids(g);
  if (comp[u] == comp[x])
    throw std::invalid_argument("edges lie in the same component");
  std::vector<std::pair<int, int>> pairs = g.edges;
  pairs[edge_a] = {u, x};
  pairs[edge_b] = {v, y};
  return make_graph(g.n, std::move(pairs));
}

Graph connect_components(const Graph& g, Rng& rng) {
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) % 2 != 0)
      throw std::invalid_argument(
          "connect_components requires all-even degrees");
  Graph cur = g;
  for (;;) {
    auto comp = component_ids(cur);
    int num = 0;
    for (int c : comp) num = std::max(num, c + 1);
    if (num <= 1) return cur;

    std::size_t ca = rng.uniform_index(num);
    std::size_t cb = rng.uniform_index(num - 1);
    if (cb >= ca) ++cb;

    std::vector<int> ea, eb;
    for (int e = 0; e < cur.m(); ++e) {
      int c = comp[cur.edges[e].first];
      if (c == static_cast<int>(ca)) ea.push_back(e);
      if (c == static_cast<int>(cb)) eb.push_back(e);
    }
    if (ea.empty() || eb.empty())
      throw std::runtime_error("component without edges cannot be merged");
    int pick_a = ea[rng.uniform_index(ea.size())];
    int pick_b = eb[rng.uniform_index(eb.size())];
    cur = merge_components_via(cur, pick_a, pick_b);
  }
}

Graph generate_instance(int n, int m, Rng& rng) {
  if (m < n)
    throw std::invalid_argument("generate_instance requires m >= n (got m=" +
                                std::to_string(m) + ", n=" +
                                std::to_string(n) + ")");
  if (m > n * (n - 1) / 2)
    throw std::invalid_argument("m exceeds the simple-graph maximum");
  constexpr int kRetries = 100;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    DegreeSequence seq = random_even_sequence(n, m, rng);
    std::optional<Graph> g = hakimi_construct(seq, rng);
    if (!g) continue;
    return connect_components(*g, rng);
  }
  throw std::runtime_error("no graphical even sequence found in " +
                           std::to_string(kRetries) + " attempts");
}

Graph generate_instance(const GenSpec& spec, int index) {
  int m = edge_count_for(spec.n, spec.m_fraction);
  Rng rng = derive_rng(spec.seed, {0x6e57u, static_cast<std::uint64_t>(spec.n),
                                   static_cast<std::uint64_t>(m),
                                   static_cast<std::uint64_t>(index)});
  return generate_instance(spec.n, m, rng);
}

}  // namespace maxecd
