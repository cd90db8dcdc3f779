#pragma once

#include <utility>
#include <vector>

#include "maxecd/graph.hpp"

namespace maxecd {

// Hard guard for the exhaustive routines below; they are test oracles and
// deliberately exponential.
inline constexpr int kOracleMaxEdges = 16;

// Every simple cycle of g exactly once, canonical form, sorted by
// (length, lexicographic vertex sequence). Throws if g.m() > kOracleMaxEdges.
std::vector<Cycle> enumerate_cycles(const Graph& g);

// Exact maximum cycle-decomposition size and one witness, by depth-first
// set packing over enumerate_cycles with edge-bitset pruning. Requires an
// Eulerian instance with at most kOracleMaxEdges edges.
std::pair<int, Decomposition> max_decomposition_bruteforce(const Graph& g);

}  // namespace maxecd
