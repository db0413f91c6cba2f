#pragma once

#include <random>
#include <vector>

#include "jchi/stable_graph.hpp"

namespace fx {

using jchi::Edge;
using jchi::StableGraph;

// One vertex of genus g with `loops` loops and `legs` legs.
inline StableGraph rose(int genus, int loops, int legs) {
  return StableGraph({genus}, std::vector<Edge>(loops, Edge{0, 0}), std::vector<int>(legs, 0));
}

// Two genus-0 vertices joined by k parallel edges; legs_a legs on vertex 0 then legs_b on vertex 1.
inline StableGraph banana(int k, int legs_a = 0, int legs_b = 0, int genus_a = 0, int genus_b = 0) {
  std::vector<int> legs(legs_a, 0);
  legs.insert(legs.end(), legs_b, 1);
  return StableGraph({genus_a, genus_b}, std::vector<Edge>(k, Edge{0, 1}), legs);
}

// Loop - bridge - loop.
inline StableGraph dumbbell() { return StableGraph({0, 0}, {{0, 0}, {0, 1}, {1, 1}}, {}); }

// A - B - C, stable thanks to its five legs.
inline StableGraph path3() { return StableGraph({0, 0, 0}, {{0, 1}, {1, 2}}, {0, 0, 1, 2, 2}); }

inline StableGraph triangle() { return StableGraph({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2}); }

// A random relabeling: vertex permutation, edge shuffle and random endpoint flips.
inline StableGraph scramble(const StableGraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> order(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> flip(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) flip[i] = rng() & 1u;
  return jchi::reorder_edges(jchi::relabel_vertices(g, perm), order, flip);
}

}  // namespace fx
