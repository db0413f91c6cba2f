#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "jchi/canonical.hpp"
#include "jchi/enumerate.hpp"
#include "jchi/matrix_tree.hpp"
#include "oracles.hpp"

using namespace jchi;

TEST_SUITE("matrix_tree") {
  TEST_CASE("spanning tree counts") {
    for (int loops = 0; loops <= 3; ++loops) CHECK(spanning_tree_count(fx::rose(0, loops, 3)) == BigInt(1));
    for (int k = 1; k <= 5; ++k) CHECK(spanning_tree_count(fx::banana(k, 2, 2)) == BigInt(k));
    CHECK(spanning_tree_count(fx::banana(3)) == BigInt(3));
    CHECK(spanning_tree_count(fx::dumbbell()) == BigInt(1));
    CHECK(spanning_tree_count(fx::banana(3), EdgeSubset::of({0, 2})) == BigInt(2));
    const TreeCount split = count_spanning_trees(fx::path3(), EdgeSubset::of({0}));
    CHECK(split.count == BigInt(0));
    CHECK_FALSE(split.connected);
  }

  TEST_CASE("laplacian drops loops") {
    const IntMatrix64 l = laplacian(fx::dumbbell(), EdgeSubset::all(3));
    CHECK(l == IntMatrix64{{1, -1}, {-1, 1}});
  }

  TEST_CASE("enumerate_spanning_trees examples") {
    CHECK(enumerate_spanning_trees(fx::triangle()).size() == 3);
    CHECK(enumerate_spanning_trees(fx::path3()) == std::vector<EdgeSubset>{EdgeSubset::of({0, 1})});
    for (const EdgeSubset& t : enumerate_spanning_trees(fx::dumbbell())) {
      CHECK_FALSE(t.contains(0));
      CHECK_FALSE(t.contains(2));
    }
    CHECK_THROWS_AS(enumerate_spanning_trees(StableGraph({1, 1}, {}, {})), InvalidInput);
  }

  TEST_CASE("Kirchhoff, deletion-contraction and isomorphism invariance") {
    for (int g = 0; g <= 3; ++g) {
      for (int n = 0; 2 * g + n <= 7; ++n) {
        if (2 * g - 2 + n <= 0) continue;
        std::map<CanonicalKey, BigInt> seen;
        for (const StableGraph& gr : enumerate_stable_graphs(g, n, false)) {
          const BigInt c = spanning_tree_count(gr);
          CHECK(c == BigInt(static_cast<long long>(enumerate_spanning_trees(gr).size())));
          CHECK(c.raw() == oracle::spanning_trees(gr.num_vertices(), gr.edges()));
          if (gr.num_edges() <= 5) {
            for (int e = 0; e < gr.num_edges(); ++e) {
              if (gr.edge(e).is_loop()) continue;
              const BigInt deleted = spanning_tree_count(gr, EdgeSubset::of({e}).complement(gr.num_edges()));
              const auto [nv, edges] = oracle::contract(gr.num_vertices(), gr.edges(), e);
              const BigInt contracted = spanning_tree_count(StableGraph(std::vector<int>(nv, 0), edges, {}));
              CHECK(c == deleted + contracted);
            }
          }
          auto [it, fresh] = seen.emplace(canonical_key(gr), c);
          if (!fresh) CHECK(it->second == c);
        }
      }
    }
  }
}
