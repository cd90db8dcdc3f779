#pragma once

#include <vector>

#include "maxecd/graph.hpp"
#include "maxecd/rng.hpp"

namespace maxecd {

// Minimum fundamental cycle of the BFS tree rooted at root, over the edges
// with alive[e] != 0. Neighbors are explored in ascending label order; equal
// lengths are broken by the smallest non-tree edge index. Throws if no cycle
// is reachable from root.
Cycle min_fundamental_cycle(const Graph& g, const std::vector<char>& alive,
                            int root);

// Same on the whole graph.
Cycle min_fundamental_cycle(const Graph& g, int root);

// Repeatedly picks a uniformly random vertex with positive residual degree
// and peels the minimum fundamental cycle found by BFS from it, until the
// alive edge set is empty. Requires even residual degrees so a cycle always
// exists. Cycles keep the original edge indexing of g.
Decomposition greedy_decomposition(const Graph& g, std::vector<char> alive,
                                   Rng& rng);

// Greedy over the whole graph; g must be an Eulerian instance.
Decomposition greedy_decomposition(const Graph& g, Rng& rng);

}  // namespace maxecd
