#include "maxecd/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace maxecd {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

int Graph::edge_index(int u, int v) const {
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  std::pair<int, int> key{u, v};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return -1;
  return static_cast<int>(it - edges.begin());
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edge_pairs) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& [u, v] : edge_pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  pair_str(u, v));
    if (u == v)
      throw std::invalid_argument("self-loop rejected: " + pair_str(u, v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_pairs.begin(), edge_pairs.end());
  for (std::size_t i = 1; i < edge_pairs.size(); ++i) {
    if (edge_pairs[i] == edge_pairs[i - 1])
      throw std::invalid_argument(
          "duplicate edge rejected: " +
          pair_str(edge_pairs[i].first, edge_pairs[i].second));
  }

  Graph g;
  g.n = n;
  g.edges = std::move(edge_pairs);
  g.adj.assign(n, {});
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    g.adj[u].emplace_back(v, e);
    g.adj[v].emplace_back(u, e);
  }
  // Lexicographic edge order makes every adjacency list ascend by neighbor.
  return g;
}

std::vector<int> canonical_cycle_vertices(std::vector<int> vs) {
  const int len = static_cast<int>(vs.size());
  int start = 0;
  for (int i = 1; i < len; ++i)
    if (vs[i] < vs[start]) start = i;
  int nxt = vs[(start + 1) % len];
  int prv = vs[(start - 1 + len) % len];
  std::vector<int> out(len);
  if (nxt <= prv) {
    for (int i = 0; i < len; ++i) out[i] = vs[(start + i) % len];
  } else {
    for (int i = 0; i < len; ++i) out[i] = vs[(start - i + len) % len];
  }
  return out;
}

Cycle make_cycle(const Graph& g, std::vector<int> vertices) {
  const int len = static_cast<int>(vertices.size());
  if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i < len; ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::invalid_argument("cycle repeats vertex " +
                                  std::to_string(sorted[i]));
  Cycle c;
  c.vertices = canonical_cycle_vertices(std::move(vertices));
  c.edge_indices.resize(len);
  for (int i = 0; i < len; ++i) {
    int u = c.vertices[i];
    int v = c.vertices[(i + 1) % len];
    int e = g.edge_index(u, v);
    if (e < 0)
      throw std::invalid_argument("cycle uses missing edge " + pair_str(u, v));
    c.edge_indices[i] = e;
  }
  return c;
}

bool cycle_less(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices < b.vertices;
}

std::vector<char> covered_edges(const Graph& g, const Decomposition& d) {
  std::vector<char> cov(g.m(), 0);
  for (const Cycle& c : d.cycles)
    for (int e : c.edge_indices)
      if (e >= 0 && e < g.m()) cov[e] = 1;
  return cov;
}

ValidationResult validate_decomposition(const Graph& g, const Decomposition& d,
                                        bool require_complete) {
  ValidationResult res;
  auto flag = [&res](const std::string& code, const std::string& detail) {
    res.ok = false;
    res.violations.push_back({code, detail});
  };

  std::vector<int> use_count(g.m(), 0);
  for (std::size_t ci = 0; ci < d.cycles.size(); ++ci) {
    const Cycle& c = d.cycles[ci];
    const int len = c.length();
    const std::string tag = "cycle " + std::to_string(ci);
    if (len < 3) {
      flag("cycle_too_short", tag + " has length " + std::to_string(len));
      continue;
    }
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    bool repeated = false;
    for (int i = 1; i < len; ++i)
      if (sorted[i] == sorted[i - 1]) repeated = true;
    if (sorted.front() < 0 || sorted.back() >= g.n) {
      flag("vertex_out_of_range", tag);
      continue;
    }
    if (repeated) {
      flag("repeated_vertex", tag);
      continue;
    }
    bool edges_ok = true;
    for (int i = 0; i < len; ++i) {
      int u = c.vertices[i];
      int v = c.vertices[(i + 1) % len];
      int e = g.edge_index(u, v);
      if (e < 0) {
        flag("missing_edge", tag + " uses non-edge " + pair_str(u, v));
        edges_ok = false;
        break;
      }
      if (static_cast<int>(c.edge_indices.size()) == len &&
          c.edge_indices[i] != e) {
        flag("edge_index_mismatch",
             tag + " stores index " + std::to_string(c.edge_indices[i]) +
                 " for edge " + pair_str(u, v));
        edges_ok = false;
        break;
      }
      ++use_count[e];
    }
    if (!edges_ok) continue;
  }

  for (int e = 0; e < g.m(); ++e) {
    if (use_count[e] > 1)
      flag("edge_reused", "edge " + std::to_string(e) + " " +
                              pair_str(g.edges[e].first, g.edges[e].second) +
                              " appears in " + std::to_string(use_count[e]) +
                              " cycles");
  }
  if (require_complete) {
    int uncovered = 0;
    for (int e = 0; e < g.m(); ++e)
      if (use_count[e] == 0) ++uncovered;
    if (uncovered > 0)
      flag("uncovered_edges", std::to_string(uncovered) + " edges uncovered");
  }
  return res;
}

std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, e] : g.adj[v]) {
        (void)e;
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int component_count(const Graph& g) {
  auto comp = component_ids(g);
  int mx = -1;
  for (int c : comp) mx = std::max(mx, c);
  return mx + 1;
}

bool is_eulerian_instance(const Graph& g) {
  if (g.n == 0) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 0 || g.degree(v) % 2 != 0) return false;
  return component_count(g) == 1;
}

EdgeRemoval remove_cycle_edges(const Graph& g, const Cycle& c) {
  std::vector<char> drop(g.m(), 0);
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    int u = c.vertices[i];
    int v = c.vertices[(i + 1) % c.vertices.size()];
    int e = g.edge_index(u, v);
    if (e < 0)
      throw std::invalid_argument("cycle edge " + pair_str(u, v) +
                                  " absent from graph");
    drop[e] = 1;
  }
  EdgeRemoval out;
  out.old_to_new.assign(g.m(), -1);
  std::vector<std::pair<int, int>> kept;
  kept.reserve(g.m());
  for (int e = 0; e < g.m(); ++e) {
    if (drop[e]) continue;
    out.old_to_new[e] = static_cast<int>(kept.size());
    kept.push_back(g.edges[e]);
  }
  // Surviving edges keep their relative order, so indices are just ranks.
  out.graph = make_graph(g.n, std::move(kept));
  return out;
}

Graph read_instance(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty instance text");
  std::istringstream head(line);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("malformed header line: \"" + line + "\"");
  std::string extra;
  if (head >> extra)
    throw std::invalid_argument("trailing tokens on header line");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument("expected " + std::to_string(m) +
                                  " edge lines, got " + std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v))
      throw std::invalid_argument("malformed edge line: \"" + line + "\"");
    if (es >> extra)
      throw std::invalid_argument("trailing tokens on edge line: \"" + line +
                                  "\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  pair_str(static_cast<int>(u),
                                           static_cast<int>(v)));
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return make_graph(static_cast<int>(n), std::move(pairs));
}

Graph read_instance_text(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

void write_instance(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

std::string write_instance_text(const Graph& g) {
  std::ostringstream out;
  write_instance(g, out);
  return out.str();
}

}  // namespace maxecd
