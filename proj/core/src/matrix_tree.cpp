#include "jchi/matrix_tree.hpp"

#include <algorithm>

namespace jchi {

IntMatrix64 laplacian(const StableGraph& g, EdgeSubset kept) {
  const int n = g.num_vertices();
  IntMatrix64 lap(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (!kept.contains(i) || e.is_loop()) continue;
    ++lap[e.u][e.u];
    ++lap[e.v][e.v];
    --lap[e.u][e.v];
    --lap[e.v][e.u];
  }
  return lap;
}

TreeCount count_spanning_trees(const StableGraph& g, EdgeSubset kept) {
  if (!spans_connected(g, kept)) return {BigInt(0), false};
  IntMatrix64 lap = laplacian(g, kept);
  lap.pop_back();
  for (auto& row : lap) row.pop_back();
  std::int64_t det = 0;
  if (int_determinant_checked(lap, det)) return {BigInt(det), true};
  IntMatrix big(lap.size());
  for (std::size_t i = 0; i < lap.size(); ++i) {
    for (std::int64_t x : lap[i]) big[i].emplace_back(x);
  }
  return {int_determinant(big), true};
}

BigInt spanning_tree_count(const StableGraph& g) {
  return count_spanning_trees(g, EdgeSubset::all(g.num_edges())).count;
}

BigInt spanning_tree_count(const StableGraph& g, EdgeSubset kept) {
  return count_spanning_trees(g, kept).count;
}

std::vector<EdgeSubset> enumerate_spanning_trees(const StableGraph& g, const Budget& budget) {
  if (!g.is_connected()) throw InvalidInput("enumerate_spanning_trees: graph is not connected");
  if (g.num_edges() > EdgeSubset::kMaxEdges) throw InvalidInput("graph has more than 64 edges");
  std::vector<int> candidates;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!g.edge(i).is_loop()) candidates.push_back(i);
  }
  const int k = g.num_vertices() - 1;
  const BigInt combos = binomial(static_cast<unsigned>(candidates.size()), static_cast<unsigned>(k));
  if (combos > BigInt(static_cast<long long>(budget.max_subsets))) {
    throw BudgetExceeded("enumerate_spanning_trees: " + combos.to_string() +
                         " candidate edge sets exceed the configured budget");
  }

  std::vector<EdgeSubset> trees;
  std::vector<int> pick;
  // Lexicographic k-combinations of the candidate edges.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(pick.size()) == k) {
      const EdgeSubset t = EdgeSubset::of(pick);
      if (spans_connected(g, t)) trees.push_back(t);
      return;
    }
    const std::size_t need = static_cast<std::size_t>(k) - pick.size();
    for (std::size_t i = start; i + need <= candidates.size(); ++i) {
      pick.push_back(candidates[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(trees.begin(), trees.end());
  return trees;
}

}  // namespace jchi
