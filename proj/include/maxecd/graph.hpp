#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace maxecd {

// Simple undirected graph with canonical edge indexing: edges are stored
// with u < v, sorted lexicographically, and indexed 0..m-1 in that order.
// Edge identity throughout the library is by index, so weight vectors,
// dual values and coverage bitsets line up across modules.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge index)

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  // Index of edge {u, v}, or -1 if absent.
  int edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
};

// Builds the canonical graph. Throws std::invalid_argument on self-loops,
// duplicate pairs, or out-of-range endpoints, naming the offending pair.
Graph make_graph(int n, std::vector<std::pair<int, int>> edge_pairs);

// Simple cycle as an ordered vertex sequence, stored in canonical form:
// rotated so the smallest label comes first, directed so the second label
// is the smaller neighbor of the first. edge_indices[i] joins vertices[i]
// and vertices[(i+1) % length].
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edge_indices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const Cycle& o) const { return vertices == o.vertices; }
  bool operator!=(const Cycle& o) const { return !(*this == o); }
};

// Canonical rotation/direction of a cyclic vertex sequence.
std::vector<int> canonical_cycle_vertices(std::vector<int> vs);

// Validates (length >= 3, distinct vertices, consecutive edges exist in g),
// canonicalizes and derives edge indices. Throws std::invalid_argument.
Cycle make_cycle(const Graph& g, std::vector<int> vertices);

// Ordering by (length, lexicographic vertex sequence) of canonical forms.
bool cycle_less(const Cycle& a, const Cycle& b);

// A collection of cycles intended to be pairwise edge-disjoint. The
// invariants are checked by validate_decomposition, not the constructor,
// so that invalid candidates can be diagnosed.
struct Decomposition {
  std::vector<Cycle> cycles;

  int size() const { return static_cast<int>(cycles.size()); }
};

// Per-edge coverage flags (size g.m()); edges covered by several cycles
// still show as covered, validate_decomposition reports the overlap.
std::vector<char> covered_edges(const Graph& g, const Decomposition& d);

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationResult {
  bool ok = true;
  std::vector<Violation> violations;
};

// True iff every cycle is a valid simple cycle of g, cycles are pairwise
// edge-disjoint, and (if require_complete) every edge of g is covered.
ValidationResult validate_decomposition(const Graph& g, const Decomposition& d,
                                        bool require_complete);

// Connected component id per vertex; isolated vertices form their own
// components.
std::vector<int> component_ids(const Graph& g);
int component_count(const Graph& g);

// Connected with every degree even. Vertices of degree 0 count as a
// connectivity violation; the n = 0 graph is not an instance.
bool is_eulerian_instance(const Graph& g);

struct EdgeRemoval {
  Graph graph;
  // old_to_new[e] is the surviving edge's index in the new graph, -1 if
  // e was removed.
  std::vector<int> old_to_new;
};

// Returns g without the edges of c. Throws if a cycle edge is absent.
EdgeRemoval remove_cycle_edges(const Graph& g, const Cycle& c);

// Instance text format: first line "n m", then m lines "u v" with 0-based
// labels in ascending lexicographic order, LF line endings.
Graph read_instance(std::istream& in);
Graph read_instance_text(const std::string& text);
void write_instance(const Graph& g, std::ostream& out);
std::string write_instance_text(const Graph& g);

}  // namespace maxecd
