#pragma once

// Enumeration of G(g,n), the stable graphs of genus g with n legs up to
// isomorphism, of its all-genus-0 part G(g,n)^0, and of tree-marked pairs.
//
// Two independent generators are provided:
//
//  * enumerate_stable_graphs_direct distributes genera and edge multisets
//    over vertex sets, then legs, and deduplicates by canonical key;
//  * the default generator starts from G(g,0), G(1,1) or G(0,3) and adds
//    legs one at a time. Every class in G(g,n) arises from exactly one class
//    in G(g,n-1) (forget the last leg and stabilize), so only insertion sites
//    that are equivalent under the parent's automorphisms need merging.

#include <cstdint>
#include <functional>
#include <vector>

#include "jchi/canonical.hpp"
#include "jchi/errors.hpp"
#include "jchi/exact.hpp"
#include "jchi/stable_graph.hpp"

namespace jchi {

/// Throws InvalidInput unless g >= 0, n >= 0 and 2g - 2 + n > 0.
void require_stable_range(int genus, int legs);

/// One representative per class, valid, sorted by canonical key.
std::vector<StableGraph> enumerate_stable_graphs(int genus, int legs, bool genus0_only,
                                                 const Budget& budget = {});

/// Streams the same classes as enumerate_stable_graphs in a deterministic
/// generation order without materializing them. Returns the class count.
std::uint64_t for_each_stable_graph(int genus, int legs, bool genus0_only,
                                    const std::function<void(const StableGraph&)>& visit,
                                    const Budget& budget = {});

/// Partition-based enumeration; sorted by canonical key. Intended for small
/// (g, n) and for the n = 0 seeds of the default generator.
std::vector<StableGraph> enumerate_stable_graphs_direct(int genus, int legs, bool genus0_only,
                                                        const Budget& budget = {});

/// All ways to add a leg labeled n+1 to `parent`, one per orbit of
/// insertion sites: on a vertex, subdividing an edge, or sprouting off an
/// existing leg.
std::vector<StableGraph> add_leg_children(const StableGraph& parent);

/// A spanning-tree class of one graph and the size of its Aut-orbit.
struct MarkedOrbit {
  MarkedGraph marked;
  std::uint64_t orbit_size = 0;
};

/// The Aut(G)-orbits on the spanning trees of `g`, sorted by marked key.
std::vector<MarkedOrbit> spanning_tree_orbits(const StableGraph& g, const Budget& budget = {});

/// Representatives of the pairs (G, T) with G in G(g,n)^0.
std::vector<MarkedGraph> enumerate_marked(int genus, int legs, const Budget& budget = {});

/// Glues legs n+2i-1 and n+2i of a genus-0 tree with 2g+n legs into an edge
/// for i = 1..g; the old edges form the spanning tree of the result.
MarkedGraph glue_tree(const StableGraph& tree, int genus);

struct FiberBucket {
  CanonicalKey key;
  MarkedGraph representative;
  std::uint64_t count = 0;
  BigInt aut_marked;
  /// 2^g g! / |Aut(G,T)|.
  Rational expected;
};

struct FiberCensus {
  int genus = 0;
  int legs = 0;
  std::uint64_t source_count = 0;  // |G(0, 2g+n)|
  std::vector<FiberBucket> buckets;

  /// Every bucket matches its expected size and the sizes sum to the source count.
  bool consistent() const;
};

/// Glues every element of G(0, 2g+n) and buckets the images by class.
FiberCensus fiber_census(int genus, int legs, const Budget& budget = {});

}  // namespace jchi
