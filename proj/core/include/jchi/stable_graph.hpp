#pragma once

// Dual graphs of stable marked curves.
//
// A StableGraph is stored in half-edge form with an implicit numbering:
// edge i owns half-edges 2i (at edges()[i].u) and 2i+1 (at edges()[i].v),
// and the leg with label k owns half-edge 2|E| + k - 1. A loop is an edge
// whose two half-edges sit on the same vertex. Legs are labeled 1..n and
// every morphism fixes them pointwise.
//
// The class also represents the unstable or disconnected graphs produced by
// edge deletion; validity is a query (violations(), validate()), not a
// construction invariant.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "jchi/errors.hpp"

namespace jchi {

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A set of edge indices of some host graph (at most 64 edges).
class EdgeSubset {
 public:
  static constexpr int kMaxEdges = 64;

  EdgeSubset() = default;
  explicit EdgeSubset(std::uint64_t mask) : mask_(mask) {}
  static EdgeSubset of(const std::vector<int>& indices);
  static EdgeSubset all(int num_edges);

  bool contains(int i) const { return (mask_ >> i) & 1u; }
  void insert(int i) { mask_ |= std::uint64_t{1} << i; }
  void erase(int i) { mask_ &= ~(std::uint64_t{1} << i); }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }

  EdgeSubset complement(int num_edges) const { return EdgeSubset(all(num_edges).mask_ & ~mask_); }
  bool is_subset_of(const EdgeSubset& o) const { return (mask_ & ~o.mask_) == 0; }
  std::vector<int> indices() const;

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
  /// Canonical order: by cardinality, then by sorted index list.
  friend bool operator<(const EdgeSubset& a, const EdgeSubset& b);

 private:
  std::uint64_t mask_ = 0;
};

class StableGraph {
 public:
  StableGraph() = default;
  /// `leg_vertices[k]` is the vertex carrying the leg labeled k + 1.
  StableGraph(std::vector<int> genera, std::vector<Edge> edges, std::vector<int> leg_vertices);

  int num_vertices() const { return static_cast<int>(genera_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_legs() const { return static_cast<int>(legs_.size()); }

  int genus(int v) const { return genera_[v]; }
  const std::vector<int>& genera() const { return genera_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  /// Vertex of the leg labeled `label` (1-based).
  int leg_vertex(int label) const { return legs_[label - 1]; }
  const std::vector<int>& leg_vertices() const { return legs_; }

  int num_half_edges() const { return 2 * num_edges() + num_legs(); }
  int half_edge_vertex(int h) const;
  /// The other half of an edge; legs are fixed points.
  int half_edge_partner(int h) const;
  /// Label of a leg half-edge, 0 for edge half-edges.
  int half_edge_label(int h) const;

  /// n(v): edge half-edges plus legs at v (a loop counts twice).
  int valence(int v) const;
  int num_loops_at(int v) const;
  int b1() const { return num_edges() - num_vertices() + 1; }
  int total_genus() const;
  bool is_connected() const;
  bool all_genus_zero() const;

  /// Human-readable descriptions of every violated invariant.
  std::vector<std::string> violations() const;
  bool is_valid() const { return violations().empty(); }
  /// Throws InvalidInput naming the first violated invariant.
  void validate() const;

  friend bool operator==(const StableGraph&, const StableGraph&) = default;

 private:
  std::vector<int> genera_;
  std::vector<Edge> edges_;
  std::vector<int> legs_;
};

/// Removes the edges in `s`; vertices, genera and legs are kept, and the
/// surviving edges keep their relative order. Check is_connected() on the
/// result to see whether `s` was disconnecting.
StableGraph delete_edges(const StableGraph& g, EdgeSubset s);

/// The graph (all vertices, edges in `kept`) with edges renumbered.
StableGraph restrict_edges(const StableGraph& g, EdgeSubset kept);

/// True iff (V, `kept`) is connected.
bool spans_connected(const StableGraph& g, EdgeSubset kept);

bool is_non_disconnecting(const StableGraph& g, EdgeSubset s);

/// True iff (V, t) is connected and |t| = |V| - 1.
bool is_spanning_tree(const StableGraph& g, EdgeSubset t);

/// Every G with (V, G) connected, in canonical EdgeSubset order.
std::vector<EdgeSubset> connected_spanning_subgraphs(const StableGraph& g, const Budget& budget = {});

/// Same graph with vertices renamed by `perm` (old index -> new index).
StableGraph relabel_vertices(const StableGraph& g, const std::vector<int>& perm);

/// Same graph with the edge list reordered (new position i holds old edge
/// order[i]) and the listed edges' endpoints swapped.
StableGraph reorder_edges(const StableGraph& g, const std::vector<int>& order,
                          const std::vector<bool>& flip);

}  // namespace jchi
