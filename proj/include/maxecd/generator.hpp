#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxecd/graph.hpp"
#include "maxecd/rng.hpp"

namespace maxecd {

// All values even and >= 2, summing to 2m.
struct DegreeSequence {
  std::vector<int> values;
};

// One benchmark cell: n vertices, m = floor(m_fraction * n(n-1)/2) edges.
struct GenSpec {
  int n = 0;
  double m_fraction = 0.0;
  std::uint64_t seed = 0;
  int count = 1;
};

// floor(fraction * n(n-1)/2)
int edge_count_for(int n, double m_fraction);

// Starts from all twos and spreads the remaining m - n increments of +2
// uniformly over the indices. Requires m >= n.
DegreeSequence random_even_sequence(int n, int m, Rng& rng);

// Realizes the sequence as a simple graph (highest-degree-first greedy),
// or nullopt when the sequence is not graphical. Labels are permuted
// uniformly first, then 4m double-edge-swap attempts mix the result while
// preserving degrees and simplicity.
std::optional<Graph> hakimi_construct(const DegreeSequence& seq, Rng& rng);

// Replaces edges (u,v) and (x,y) from two different components by (u,x)
// and (v,y). Deterministic primitive behind connect_components.
Graph merge_components_via(const Graph& g, int edge_a, int edge_b);

// Repeats random merge steps until the graph is connected. Requires all
// degrees even (so removing an edge never disconnects a component).
Graph connect_components(const Graph& g, Rng& rng);

// Connected all-even-degree simple graph with exactly n vertices and m
// edges. Retries with fresh sequences when the draw is not graphical
// (budget 100), then throws std::runtime_error.
Graph generate_instance(int n, int m, Rng& rng);

// Instance `index` of a cell, on its own RNG stream.
Graph generate_instance(const GenSpec& spec, int index);

}  // namespace maxecd
