#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace coexnull;

TEST_SUITE("optimizer") {
  TEST_CASE("method names round trip") {
    for (Method m : {Method::NoNull, Method::Greedy, Method::Exhaustive}) {
      CHECK(method_from_string(to_string(m)) == m);
    }
    CHECK_THROWS_AS(method_from_string("greedy"), InvalidArgument);
  }

  TEST_CASE("nothing sensed leaves every solver at the all-zeros decision") {
    const RadioParams p;
    const Scenario s = oracle::layout(p, 2000.0, {{0, 10}}, {{2010, 0}, {1990, 20}});
    REQUIRE(bs_sensing_flags(s) == std::vector<bool>{false, false, false});
    for (Method m : {Method::Greedy, Method::Exhaustive}) {
      const NullingSolution sol = solve(s, Policy::MaxLte, m);
      CHECK(sol.method == m);
      CHECK(sol.decision == NullingDecision::none(2));
      CHECK(sol.evaluations == 0);
      CHECK(sol.report.feasible);
    }
  }

  TEST_CASE("a single antenna has no spare degree of freedom") {
    RadioParams p;
    p.K = 1;
    const Scenario s = sample_scenario(p, 20, 1, 6, 50, 50, 4);
    const NullingSolution ex = solve_exhaustive(s, Policy::MaxLte);
    const NullingSolution gr = solve_greedy(s, Policy::MaxLte);
    CHECK(ex.decision.null_count() == 0);
    CHECK(gr.decision.null_count() == 0);
    CHECK(gr.evaluations == 0);
  }

  TEST_CASE("one sensed station worth nulling is the whole group") {
    // AP 300 m out is neither heard by nor hears the BS; the lone station
    // sits next to the BS and is drowned by its beam until nulled.
    const RadioParams p;
    const Scenario s = oracle::layout(p, 300.0, {{-10, 10}}, {{15, 5}});
    REQUIRE(bs_sensing_flags(s) == std::vector<bool>{false, true});
    const NullingSolution gr = solve_greedy(s, Policy::MaxSum);
    NullingDecision expected = NullingDecision::none(1);
    expected.x[1] = true;
    CHECK(gr.decision == expected);
    CHECK(gr.evaluations == 1);
    CHECK(solve_exhaustive(s, Policy::MaxSum).decision == expected);
    CHECK(gr.report.objective_value > solve_nonull(s, Policy::MaxSum).report.objective_value);
  }

  TEST_CASE("enumeration guard refuses more than 2^20 subsets") {
    const RadioParams p;
    std::vector<std::pair<double, double>> stas;
    for (int i = 0; i < 22; ++i) stas.emplace_back(10.0 + std::cos(i), std::sin(i) + 0.5);
    const Scenario s = oracle::layout(p, 10.0, {{-5, 5}}, stas);
    CHECK_THROWS_AS(solve_exhaustive(s, Policy::MaxSum), InvalidArgument);
    CHECK_NOTHROW(solve_greedy(s, Policy::MaxSum));
  }

  TEST_CASE("N = 3, K = 4 matches the brute-force argmax") {
    oracle::Gen g(3);
    RadioParams p;
    p.K = 4;
    for (int t = 0; t < 200; ++t) {
      const Policy pol = g.pick(std::vector<Policy>{Policy::MaxSum, Policy::MaxLte, Policy::MaxWifi});
      const Scenario s = sample_scenario(p, g.uniform(5, 130), 1, 3, 50, 50, g.seed());
      const NullingSolution ex = solve_exhaustive(s, pol);
      const oracle::BruteForce bf = oracle::brute_force(s, pol);
      CAPTURE(t);
      CHECK(ex.decision.x == bf.x);
      CHECK(ex.report.objective_value == bf.objective);
    }
  }

  TEST_CASE("property: exhaustive agrees with brute force on random small instances") {
    oracle::Gen g(17);
    for (int t = 0; t < 150; ++t) {
      RadioParams p;
      p.K = g.integer(1, 7);
      const Policy pol = g.pick(std::vector<Policy>{Policy::MaxSum, Policy::MaxLte, Policy::MaxWifi});
      const int M = g.integer(1, 2);
      const Scenario s = sample_scenario(p, g.uniform(5, 130), M, g.integer(0, 7), 50, 50, g.seed());
      const int y = g.integer(0, M - 1);
      const NullingSolution ex = solve_exhaustive(s, pol, y);
      const oracle::BruteForce bf = oracle::brute_force(s, pol, y);
      CHECK(ex.decision.x == bf.x);
      CHECK(ex.decision.y == y);
      CHECK(ex.report.objective_value == bf.objective);
    }
  }

  TEST_CASE("property: greedy sits between NoNull and the optimum") {
    oracle::Gen g(99);
    for (int t = 0; t < 300; ++t) {
      RadioParams p;
      p.K = g.pick(std::vector<int>{2, 4, 6, 10});
      const Policy pol = g.pick(std::vector<Policy>{Policy::MaxSum, Policy::MaxLte, Policy::MaxWifi});
      const int N = g.integer(0, 10);
      const Scenario s = sample_scenario(p, g.uniform(5, 130), 1, N, 50, 50, g.seed());
      const NullingSolution nn = solve_nonull(s, pol);
      const NullingSolution gr = solve_greedy(s, pol);
      const NullingSolution ex = solve_exhaustive(s, pol);
      CAPTURE(t);
      CHECK(gr.report.feasible);
      CHECK(ex.report.feasible);
      CHECK(gr.report.objective_value >= nn.report.objective_value);
      CHECK(gr.report.objective_value <= ex.report.objective_value);
      CHECK(gr.evaluations <= static_cast<std::int64_t>((N + 2) * (N + 2)));
      CHECK(gr.decision.null_count() <= p.K - 1);
      CHECK(ex.decision.null_count() <= p.K - 1);
      const auto flags = bs_sensing_flags(s);
      for (std::size_t i = 0; i < flags.size(); ++i) {
        if (gr.decision.x[i]) CHECK(flags[i]);
        if (ex.decision.x[i]) CHECK(flags[i]);
      }
      if (gr.decision.null_count() == 0) {
        CHECK(gr.evaluations <= std::count(flags.begin(), flags.end(), true));
      }
      if (pol == Policy::MaxSum) {
        const double floor = nn.report.wifi_mean_throughput * (1 - kBaselineTolerance);
        CHECK(gr.report.wifi_mean_throughput >= floor);
        CHECK(ex.report.wifi_mean_throughput >= floor);
      }
    }
  }

  TEST_CASE("property: solving twice gives the same answer") {
    oracle::Gen g(1);
    for (int t = 0; t < 50; ++t) {
      const Scenario s = sample_scenario(RadioParams{}, g.uniform(5, 90), 1, 8, 50, 50, g.seed());
      for (Method m : {Method::Greedy, Method::Exhaustive}) {
        const NullingSolution a = solve(s, Policy::MaxSum, m);
        const NullingSolution b = solve(s, Policy::MaxSum, m);
        CHECK(a.decision == b.decision);
        CHECK(a.evaluations == b.evaluations);
        CHECK(a.report.objective_value == b.report.objective_value);
      }
    }
  }

  TEST_CASE("NoNull solution is the evaluated all-zeros decision") {
    const Scenario s = sample_scenario(RadioParams{}, 30, 1, 8, 50, 50, 8);
    const NullingSolution nn = solve(s, Policy::MaxSum, Method::NoNull);
    CHECK(nn.method == Method::NoNull);
    CHECK(nn.evaluations == 0);
    CHECK(nn.decision == NullingDecision::none(8));
    const oracle::Baseline ref = oracle::nonull(s);
    CHECK(nn.report.objective_value ==
          doctest::Approx(0.5 * (ref.lte + ref.wifi_mean)).epsilon(1e-9));
  }
}
