#pragma once

// Spanning trees of multigraphs. Loops lie in no spanning tree and are
// dropped before the Laplacian is assembled.

#include <cstdint>
#include <vector>

#include "jchi/errors.hpp"
#include "jchi/exact.hpp"
#include "jchi/stable_graph.hpp"

namespace jchi {

using IntMatrix64 = std::vector<std::vector<std::int64_t>>;

/// Laplacian of (V, kept): diagonal = non-loop degree, off-diagonal =
/// minus the number of edges joining the two vertices.
IntMatrix64 laplacian(const StableGraph& g, EdgeSubset kept);

struct TreeCount {
  BigInt count;
  bool connected = true;
};

/// Number of spanning trees of (V, kept) via the cofactor that deletes the
/// last row and column. Disconnected input gives count 0, connected = false.
TreeCount count_spanning_trees(const StableGraph& g, EdgeSubset kept);

/// c(G) of the whole graph.
BigInt spanning_tree_count(const StableGraph& g);
/// c of the spanning subgraph (V, kept).
BigInt spanning_tree_count(const StableGraph& g, EdgeSubset kept);

/// Every spanning tree as an edge subset, in canonical subset order.
/// Throws InvalidInput for disconnected graphs, BudgetExceeded when the
/// candidate count exceeds budget.max_subsets.
std::vector<EdgeSubset> enumerate_spanning_trees(const StableGraph& g, const Budget& budget = {});

}  // namespace jchi
