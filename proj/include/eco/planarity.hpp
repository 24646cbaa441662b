#pragma once

#include <utility>
#include <vector>

namespace eco {

// Planarity test over the simple graph induced by `edges` (parallel edges
// and self-loops are ignored). Guarded to at most 12 distinct endpoints;
// beyond that it raises R104.
//
// Strategy: accept when the simple edge count is at most 8 or the graph is
// acyclic; reject via the Euler bound m > 3n - 6; otherwise search
// exhaustively for a K5 or K3,3 subdivision, branching over vertex-disjoint
// paths between candidate branch vertices.
bool builtin_is_planar(const std::vector<std::pair<long long, long long>>& edges);

}  // namespace eco
