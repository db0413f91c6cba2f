#pragma once

// Isomorphism classes and automorphism groups of stable graphs.
//
// Isomorphisms are half-edge bijections that respect the vertex assignment,
// the edge pairing and the genera, and fix every leg label. Such a bijection
// is determined by a vertex permutation together with a choice of how
// parallel edges (and the two halves of each loop) are matched, so the
// search runs over vertex orderings (colour refinement plus individualization)
// and the edge-level factor is multiplied in afterwards:
//
//   |Aut(G)| = |Aut_V(G)| * prod_{u<w} m(u,w)! * prod_v l(v)! 2^{l(v)}
//
// where m counts parallel edges and l counts loops.

#include <compare>
#include <string>
#include <vector>

#include "jchi/exact.hpp"
#include "jchi/stable_graph.hpp"

namespace jchi {

/// Byte encoding of an isomorphism class; equal iff isomorphic.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;
  static CanonicalKey from_hex(std::string_view hex);

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes.compare(b.bytes) <=> 0;
  }
};

/// A stable graph with a distinguished spanning tree.
struct MarkedGraph {
  StableGraph graph;
  EdgeSubset tree;
};

/// Result of one canonical-labeling search.
struct SymmetryInfo {
  CanonicalKey key;
  /// canonical position -> vertex, for the first minimal labeling found.
  std::vector<int> canonical_order;
  /// The vertex permutations (vertex -> image) induced by automorphisms;
  /// the identity comes first.
  std::vector<std::vector<int>> vertex_automorphisms;
  /// Number of half-edge automorphisms inducing the identity on vertices.
  BigInt edge_factor;

  BigInt order() const { return BigInt(static_cast<long long>(vertex_automorphisms.size())) * edge_factor; }
};

/// Analyzes `g`, treating edges in `colored` as a second edge colour that
/// automorphisms must preserve (pass an empty subset for plain graphs).
SymmetryInfo analyze_symmetry(const StableGraph& g, EdgeSubset colored = {});

CanonicalKey canonical_key(const StableGraph& g);
CanonicalKey canonical_key(const MarkedGraph& m);

/// |Aut(G)| as a group of half-edge permutations fixing the legs.
BigInt aut_order(const StableGraph& g);
/// |Aut(G, T)|: the automorphisms mapping the edge set T onto itself.
BigInt aut_order_marked(const MarkedGraph& m);

/// The representative of g's class with vertices in canonical order and
/// edges sorted; isomorphic inputs give identical outputs.
StableGraph canonical_form(const StableGraph& g);

/// Canonical form of a marked graph; the tree edges are listed first.
MarkedGraph canonical_form(const MarkedGraph& m);

}  // namespace jchi
