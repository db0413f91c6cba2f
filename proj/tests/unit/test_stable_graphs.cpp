#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "jchi/enumerate.hpp"
#include "jchi/graph_io.hpp"
#include "jchi/matrix_tree.hpp"

using namespace jchi;

TEST_SUITE("stable_graphs") {
  TEST_CASE("b1") {
    CHECK(fx::rose(0, 0, 3).b1() == 0);
    CHECK(fx::rose(0, 1, 1).b1() == 1);
    CHECK(fx::banana(3).b1() == 2);
  }

  TEST_CASE("valence, genus and stability") {
    const StableGraph g = fx::rose(0, 1, 1);
    CHECK(g.valence(0) == 3);
    CHECK(g.total_genus() == 1);
    CHECK(g.is_valid());
    CHECK(fx::dumbbell().total_genus() == 2);
    const StableGraph bad({0}, {}, {0, 0});
    REQUIRE_FALSE(bad.is_valid());
    CHECK(bad.violations().front().find("unstable") != std::string::npos);
    const StableGraph split({1, 1}, {}, {});
    CHECK_FALSE(split.is_connected());
    CHECK_THROWS_AS(split.validate(), InvalidInput);
  }

  TEST_CASE("half-edges") {
    const StableGraph g = fx::banana(2, 1, 1);
    CHECK(g.num_half_edges() == 6);
    CHECK(g.half_edge_vertex(0) == 0);
    CHECK(g.half_edge_vertex(1) == 1);
    CHECK(g.half_edge_partner(2) == 3);
    CHECK(g.half_edge_partner(4) == 4);
    CHECK(g.half_edge_label(5) == 2);
    CHECK(g.half_edge_label(1) == 0);
  }

  TEST_CASE("delete_edges") {
    const StableGraph g = fx::banana(2, 1, 1);
    CHECK(delete_edges(g, EdgeSubset{}) == g);
    const StableGraph one = delete_edges(fx::rose(0, 1, 1), EdgeSubset::of({0}));
    CHECK(one.num_edges() == 0);
    CHECK(one.b1() == 0);
    const StableGraph single = delete_edges(g, EdgeSubset::of({1}));
    CHECK(single.num_edges() == 1);
    CHECK(single.num_vertices() == 2);
    CHECK(single.is_connected());
  }

  TEST_CASE("is_non_disconnecting") {
    const StableGraph bridge = fx::banana(1, 2, 2);
    CHECK_FALSE(is_non_disconnecting(bridge, EdgeSubset::of({0})));
    CHECK(is_non_disconnecting(fx::banana(2, 1, 1), EdgeSubset::of({0})));
    CHECK(is_non_disconnecting(fx::rose(0, 1, 1), EdgeSubset::of({0})));
  }

  TEST_CASE("is_spanning_tree") {
    CHECK(is_spanning_tree(fx::rose(0, 0, 3), EdgeSubset{}));
    CHECK_FALSE(is_spanning_tree(fx::rose(0, 1, 1), EdgeSubset::of({0})));
    CHECK(is_spanning_tree(fx::path3(), EdgeSubset::of({0, 1})));
  }

  TEST_CASE("connected_spanning_subgraphs") {
    CHECK(connected_spanning_subgraphs(fx::rose(0, 1, 1)) == std::vector<EdgeSubset>{EdgeSubset{}, EdgeSubset::of({0})});
    CHECK(connected_spanning_subgraphs(fx::banana(1, 2, 2)).size() == 1);
    const auto subs = connected_spanning_subgraphs(fx::banana(2, 1, 1));
    CHECK(subs == std::vector<EdgeSubset>{EdgeSubset::of({0}), EdgeSubset::of({1}), EdgeSubset::of({0, 1})});
    Budget tiny;
    tiny.max_edges = 2;
    CHECK_THROWS_AS(connected_spanning_subgraphs(fx::banana(3), tiny), BudgetExceeded);
  }

  TEST_CASE("edge subset order") {
    CHECK(EdgeSubset::of({2}) < EdgeSubset::of({0, 1}));
    CHECK(EdgeSubset::of({0, 2}) < EdgeSubset::of({1, 2}));
    CHECK(EdgeSubset::of({0, 3}).complement(4) == EdgeSubset::of({1, 2}));
  }

  TEST_CASE("properties over enumerated graphs") {
    std::mt19937 rng(3);
    for (auto [genus, legs] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 1}, {3, 0}}) {
      for (const StableGraph& g : enumerate_stable_graphs(genus, legs, false)) {
        const int ne = g.num_edges();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
          const EdgeSubset s(mask);
          // connected after deletion iff the complement contains a spanning tree
          CHECK(delete_edges(g, s).is_connected() ==
                !spanning_tree_count(g, s.complement(ne)).is_zero());
          if (is_spanning_tree(g, s)) CHECK(is_non_disconnecting(g, s.complement(ne)));
        }
        const StableGraph h = fx::scramble(g, rng);
        CHECK(h.total_genus() == genus);
        CHECK(h.is_valid());
      }
    }
  }

  TEST_CASE("graph file round trip and validation") {
    const StableGraph g = fx::dumbbell();
    CHECK(graph_from_json(graph_to_json(g), false) == g);
    CHECK_THROWS_AS(graph_from_json("{\"vertices\":[{\"genus\":0}],\"edges\":[[0,1]]}"), InvalidInput);
    CHECK_THROWS_AS(graph_from_json("{\"vertices\":[{\"genus\":0}],\"edges\":[],"
                                    "\"legs\":[{\"vertex\":0,\"label\":2}]}", false),
                    InvalidInput);
    CHECK_THROWS_AS(graph_from_json("{\"vertices\":[{\"genus\":0}],\"edges\":[]}"), InvalidInput);
    CHECK_THROWS_AS(graph_from_json("not json"), InvalidInput);
    CHECK(graph_from_json(R"({"vertices":[{"genus":1}],"edges":[],"legs":[{"vertex":0,"label":1}]})") ==
          fx::rose(1, 0, 1));
  }
}
