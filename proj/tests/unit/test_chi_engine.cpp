#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "jchi/chi.hpp"
#include "jchi/enumerate.hpp"
#include "jchi/matrix_tree.hpp"
#include "oracles.hpp"
#include "random_phi.hpp"

using namespace jchi;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST_SUITE("chi_engine") {
  TEST_CASE("Harer-Zagier values") {
    CHECK(hz_chi_open(0, 3) == 1);
    CHECK(hz_chi_open(0, 4) == -1);
    CHECK(hz_chi_open(0, 5) == 2);
    CHECK(hz_chi_open(1, 1) == q("-1/12"));
    CHECK(hz_chi_open(2, 0) == q("-1/240"));
    for (int n = 3; n <= 10; ++n) {
      const Rational expected = Rational(factorial(n - 3)) * Rational((n - 1) % 2 == 0 ? 1 : -1);
      CHECK(hz_chi_open(0, n) == expected);
    }
    CHECK_THROWS_AS(hz_chi_open(0, 2), InvalidInput);
    CHECK_THROWS_AS(hz_chi_open(1, 0), InvalidInput);
  }

  TEST_CASE("open strata") {
    CHECK(chi_open_stratum(fx::rose(1, 0, 1)) == q("-1/12"));
    CHECK(chi_open_stratum(fx::rose(0, 1, 1)) == q("1/2"));
    CHECK(chi_open_stratum(fx::rose(0, 2, 0)) == q("-1/8"));
    CHECK(chi_open_stratum(fx::dumbbell()) == q("1/8"));
    CHECK(chi_open_stratum(fx::banana(3)) == q("1/12"));
  }

  TEST_CASE("chi_bar") {
    CHECK(chi_bar(0, 3) == 1);
    CHECK(chi_bar(0, 4) == 2);
    CHECK(chi_bar(0, 5) == 7);
    CHECK(chi_bar(1, 1) == q("5/12"));
    const auto expected = oracle::chi_bar_genus0(9);
    for (int n = 3; n <= 9; ++n) {
      const Rational v = chi_bar(0, n);
      CHECK(v.is_integer());
      CHECK(v.to_string() == mpq_class(expected[n - 3]).get_str());
    }
  }

  TEST_CASE("stratification sum is order independent") {
    std::mt19937 rng(29);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {0, 6}}) {
      auto graphs = enumerate_stable_graphs(g, n, false);
      std::shuffle(graphs.begin(), graphs.end(), rng);
      Rational sum;
      for (const StableGraph& gr : graphs) sum += chi_open_stratum(gr);
      CHECK(sum == chi_bar(g, n));
    }
  }

  TEST_CASE("generalized Jacobians") {
    CHECK(chi_generalized_jacobian(fx::rose(0, 0, 3)) == 1);
    CHECK(chi_generalized_jacobian(fx::path3()) == 1);
    CHECK(chi_generalized_jacobian(fx::rose(0, 1, 1)) == 0);
    CHECK(chi_generalized_jacobian(fx::banana(1, 1, 2, 1, 0)) == 0);
    CHECK_THROWS_AS(chi_generalized_jacobian(StableGraph({0, 0}, {}, {0, 0, 0, 1, 1, 1})), InvalidInput);
  }

  TEST_CASE("fine compactified Jacobians") {
    std::mt19937 rng(31);
    auto some_sigma = [&](const StableGraph& g) {
      for (;;) {
        const std::int64_t d = static_cast<int>(rng() % 5) - 2;
        if (auto phi = fx::random_polarization(g, d, rng)) return sigma_from_polarization(g, *phi, d);
      }
    };
    const StableGraph loop = fx::rose(0, 1, 1);
    CHECK(chi_fine_cj(loop, some_sigma(loop)) == BigInt(1));
    const StableGraph ban = fx::banana(3);
    for (int i = 0; i < 3; ++i) CHECK(chi_fine_cj(ban, some_sigma(ban)) == BigInt(3));
    const StableGraph smooth = fx::rose(1, 0, 1);
    CHECK(chi_fine_cj(smooth, some_sigma(smooth)) == BigInt(0));
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 0}, {2, 1}}) {
      for (const StableGraph& gr : enumerate_stable_graphs(g, n, false)) {
        const BigInt expected = gr.all_genus_zero() ? spanning_tree_count(gr) : BigInt(0);
        for (int i = 0; i < 3; ++i) CHECK(chi_fine_cj(gr, some_sigma(gr)) == expected);
      }
    }
  }

  TEST_CASE("both routes") {
    CHECK(chi_jacobian_strata(1, 1) == q("1/2"));
    CHECK(chi_jacobian_strata(1, 2) == 1);
    CHECK(chi_jacobian_strata(2, 0) == q("1/4"));
    CHECK(chi_jacobian_closed(1, 1) == q("1/2"));
    CHECK(chi_jacobian_closed(1, 2) == 1);
    CHECK(chi_jacobian_closed(2, 0) == q("1/4"));
    for (int n = 3; n <= 7; ++n) CHECK(chi_jacobian_strata(0, n) == chi_bar(0, n));
  }

  TEST_CASE("engine memo") {
    ChiEngine engine;
    CHECK(engine.chi_jacobian_closed(2, 1) == engine.chi_jacobian_strata(2, 1));
    const auto table = engine.bar_table();
    REQUIRE(table.count({0, 5}) == 1);
    CHECK(table.at({0, 5}).value == 7);
    CHECK(engine.chi_open(1, 1) == q("-1/12"));
  }

  TEST_CASE("verify_main_theorem") {
    ChiEngine engine;
    const VerifyReport small = engine.verify_main_theorem(1, 3);
    CHECK(small.all_equal());
    int stable = 0;
    for (const VerifyCell& c : small.cells) {
      const bool unstable = 2 * c.genus - 2 + c.legs <= 0;
      CHECK((c.status == VerifyCell::Status::Unstable) == unstable);
      if (!unstable) {
        ++stable;
        CHECK(c.status == VerifyCell::Status::Equal);
        CHECK(c.fiber_checked);
        CHECK(c.fiber_ok);
      }
    }
    CHECK(stable == 4);
    const VerifyReport g2 = engine.verify_main_theorem(2, 0);
    CHECK(*g2.cells.back().strata == q("1/4"));

    Budget tight;
    tight.max_graphs = 30;
    const VerifyReport skipped = ChiEngine(tight).verify_main_theorem(1, 5);
    CHECK(skipped.all_equal());
    bool any_skip = false;
    for (const VerifyCell& c : skipped.cells) any_skip |= c.status == VerifyCell::Status::Skipped;
    CHECK(any_skip);
    CHECK(skipped.table().find("SKIP") != std::string::npos);
  }

  TEST_CASE("tables") {
    const std::vector<ChiRow> rows = {{1, 1, "strata", q("1/2")}, {1, 1, "closed", q("1/2")}};
    CHECK(chi_table_csv(rows) == "g,n,route,value\n1,1,strata,1/2\n1,1,closed,1/2\n");
    CHECK(chi_table_json(rows) ==
          R"([{"g":1,"n":1,"route":"strata","value":"1/2"},{"g":1,"n":1,"route":"closed","value":"1/2"}])");
  }
}
