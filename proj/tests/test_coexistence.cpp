#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace coexnull;

namespace {

// The plain d^-gamma channel the worked examples are written against.
RadioParams unit_loss() {
  RadioParams p;
  p.PL0 = 0.0;
  return p;
}

// Exact T_on trace as a fraction over a common denominator (N_cs + 1),
// starting from integer millisecond settings.
struct Rational {
  std::int64_t num;
  std::int64_t den;
};

Rational rational_fixed_point(std::int64_t t_on, std::int64_t t_csat,
                              std::int64_t step, std::int64_t n_cs, int steps) {
  const std::int64_t den = n_cs + 1;
  std::int64_t cur = t_on * den;
  const std::int64_t floor = t_csat;
  for (int k = 0; k < steps; ++k) cur = std::max(cur - step * den, floor);
  return {cur, den};
}

}  // namespace

TEST_SUITE("sensing") {
  TEST_CASE("BS hears a 17 dBm node at 10 m") {
    Scenario s = oracle::layout(unit_loss(), 10.0, {{-5, 0}}, {});
    CHECK(bs_senses_node(s, 0));  // -13 dBm >= -82 dBm
  }

  TEST_CASE("a node a million metres away is not sensed") {
    Scenario s = oracle::layout(unit_loss(), 1e6, {{-5, 0}}, {{1e6, 10}});
    CHECK_FALSE(bs_senses_node(s, 0));
    CHECK_FALSE(bs_senses_node(s, 1));
  }

  TEST_CASE("received power exactly at the threshold counts as sensed") {
    RadioParams p = unit_loss();
    // 17 - 30 log10(10) = -13 exactly.
    p.Gamma_w = -13.0;
    Scenario s = oracle::layout(p, 10.0, {{-5, 0}}, {});
    CHECK(bs_senses_node(s, 0));
    p.Gamma_w = std::nextafter(-13.0, 0.0);
    s.params = p;
    CHECK_FALSE(bs_senses_node(s, 0));
  }

  TEST_CASE("AP hears a single-antenna BS at 10 m") {
    RadioParams p = unit_loss();
    p.K = 1;
    const Scenario s = oracle::layout(p, 10.0, {{0, 5}}, {});
    const std::vector<double> none;
    CHECK(ap_senses_bs(s, lcmv_weights(1, s.ues[0].angle_from_lte, none)));
  }

  TEST_CASE("AP a million metres away does not hear the BS") {
    RadioParams p = unit_loss();
    p.K = 1;
    const Scenario s = oracle::layout(p, 1e6, {{0, 5}}, {});
    const std::vector<double> none;
    CHECK_FALSE(ap_senses_bs(s, lcmv_weights(1, s.ues[0].angle_from_lte, none)));
  }

  TEST_CASE("a nulled AP does not hear the BS") {
    RadioParams p = unit_loss();
    p.K = 4;
    const Scenario s = oracle::layout(p, 10.0, {{0, 5}}, {});
    const std::vector<double> nulls{s.ap.angle_from_lte};
    const BeamWeights bw = lcmv_weights(4, s.ues[0].angle_from_lte, nulls);
    CHECK_FALSE(ap_senses_bs(s, bw));
    NullingDecision d = NullingDecision::none(0);
    d.x[0] = true;
    const CoexState st = assess(s, d, bw);
    CHECK_FALSE(st.sigma_w);
    CHECK(st.alpha_w == 1.0);
    CHECK(st.tau_w == 0.0);
  }
}

TEST_SUITE("airtime") {
  TEST_CASE("fair share with and without nulls") {
    CHECK(airtime_lte(10, 0) == 1.0 / 11);
    CHECK(airtime_lte(10, 2) == 1.0 / 9);
    CHECK(airtime_lte(10, 2) - airtime_lte(10, 0) == 1.0 / 9 - 1.0 / 11);
    CHECK(airtime_lte(0, 0) == 1.0);
    CHECK(airtime_lte(3, 3) == 1.0);
  }

  TEST_CASE("nulled count outside [0, N_cs] is rejected") {
    CHECK_THROWS_AS(airtime_lte(2, 3), InvalidArgument);
    CHECK_THROWS_AS(airtime_lte(2, -1), InvalidArgument);
  }

  TEST_CASE("property: nulling gain shrinks as more nodes share the channel") {
    for (int k = 1; k <= 4; ++k) {
      double previous = INFINITY;
      for (int n = k; n <= 10; ++n) {
        const double gain = airtime_lte(n, k) - airtime_lte(n, 0);
        CHECK(gain > 0.0);
        CHECK(gain < previous);
        previous = gain;
      }
      for (int n = 1; n <= 10; ++n) {
        for (int j = 0; j < n; ++j) CHECK(airtime_lte(n, j + 1) > airtime_lte(n, j));
      }
    }
  }

  TEST_CASE("carrier-sense regime table") {
    // Columns: no nulling, STAs nulled, AP nulled; rows: whether the AP
    // senses the BS. Only an AP that hears the BS and is not nulled yields.
    const int n_cs = 6;
    const int k = 2;
    for (bool sigma_w : {false, true}) {
      for (int column = 0; column < 3; ++column) {
        const bool ap_nulled = column == 2;
        const int nulled = column == 0 ? 0 : k;
        const double a_l = airtime_lte(n_cs, nulled);
        const double a_w = airtime_wifi(sigma_w, ap_nulled, a_l);
        CAPTURE(sigma_w);
        CAPTURE(column);
        CHECK(a_l == 1.0 / (n_cs - nulled + 1));
        if (sigma_w && !ap_nulled) {
          CHECK(a_w == 1.0 - 1.0 / (n_cs - nulled + 1));
        } else {
          CHECK(a_w == 1.0);
        }
      }
    }
    CHECK(airtime_wifi(false, false, 0.3) == 1.0);
    CHECK(airtime_wifi(true, false, 1.0 / 9) == 1.0 - 1.0 / 9);
    CHECK(airtime_wifi(true, true, 0.5) == 1.0);
  }
}

TEST_SUITE("csat") {
  TEST_CASE("backlogged trace from 40 ms steps down to 80/11 and stays") {
    const RadioParams p;
    const auto trace = csat_trace_backlogged(p, 10, 12);
    REQUIRE(trace.size() == 13);
    const std::vector<double> head{40, 35, 30, 25, 20, 15, 10};
    for (std::size_t k = 0; k < head.size(); ++k) CHECK(trace[k] == head[k]);
    for (std::size_t k = 7; k < trace.size(); ++k) CHECK(trace[k] == 80.0 / 11);
  }

  TEST_CASE("no sensed nodes lifts T_on to the full cycle at the first step") {
    const auto trace = csat_trace_backlogged(RadioParams{}, 0, 5);
    CHECK(trace[0] == 40.0);
    for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k] == 80.0);
  }

  TEST_CASE("an idle medium never triggers adaptation") {
    const bool idle[6] = {false, false, false, false, false, false};
    const auto trace = csat_trace(RadioParams{}, 4, idle);
    CHECK(trace.size() == 7);
    for (double t : trace) CHECK(t == 40.0);
  }

  TEST_CASE("adaptation only happens on busy steps") {
    const bool mu[4] = {true, false, true, true};
    const auto trace = csat_trace(RadioParams{}, 3, mu);
    CHECK(trace == std::vector<double>{40, 35, 35, 30, 25});
  }

  TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(csat_trace_backlogged(RadioParams{}, 3, 0), InvalidArgument);
    CHECK_THROWS_AS(csat_trace_backlogged(RadioParams{}, -1, 3), InvalidArgument);
  }

  TEST_CASE("property: fixed point equals the rational fair share exactly") {
    for (int n = 1; n <= 10; ++n) {
      const auto trace = csat_trace_backlogged(RadioParams{}, n, 40);
      const Rational r = rational_fixed_point(40, 80, 5, n, 40);
      CAPTURE(n);
      CHECK(r.num == 80);
      CHECK(trace.back() == static_cast<double>(r.num) / static_cast<double>(r.den));
      for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k] <= trace[k - 1]);
    }
  }
}

TEST_SUITE("access delay") {
  TEST_CASE("worked values") {
    const AccessDelay half = access_delay(0.5, 80.0);
    CHECK(half.tau_l == 10.0);
    CHECK(half.tau_w == 10.0);
    CHECK(access_delay(1.0, 80.0).tau_l == 0.0);
    CHECK(access_delay(1.0 / 11, 40.0).tau_w == doctest::Approx(20.0 / 121).epsilon(1e-14));
    CHECK(access_delay(1.0 / 11, 40.0).tau_w == doctest::Approx(0.165).epsilon(0.01));
  }

  TEST_CASE("AP that does not defer waits for nothing") {
    CHECK(access_delay(0.3, 80.0, false).tau_w == 0.0);
    CHECK(access_delay(0.3, 80.0, false).tau_l == doctest::Approx(0.49 * 40));
  }

  TEST_CASE("alpha outside [0, 1] is rejected") {
    CHECK_THROWS_AS(access_delay(-0.1, 80.0), InvalidArgument);
    CHECK_THROWS_AS(access_delay(1.1, 80.0), InvalidArgument);
  }

  TEST_CASE("property: delays sum to at most half a cycle") {
    oracle::Gen g(8);
    for (int i = 0; i < 1000; ++i) {
      const double a = g.uniform(0.0, 1.0);
      const double T = g.uniform(1.0, 200.0);
      const AccessDelay d = access_delay(a, T);
      CHECK(d.tau_l >= 0.0);
      CHECK(d.tau_w >= 0.0);
      CHECK(d.tau_l + d.tau_w <= T / 2 * (1 + 1e-15));
    }
  }
}

TEST_SUITE("assess") {
  TEST_CASE("counts nulled sensed nodes including the AP") {
    RadioParams p;
    p.K = 6;
    // Everything within a few tens of metres is sensed under the defaults.
    const Scenario s = oracle::layout(p, 20.0, {{-10, 3}}, {{25, 5}, {20, -6}, {30, 2}});
    REQUIRE(bs_sensing_flags(s) == std::vector<bool>{true, true, true, true});
    NullingDecision d = NullingDecision::none(3);
    d.x[0] = true;
    d.x[2] = true;
    std::vector<double> nulls{s.wifi_node(0).angle_from_lte, s.wifi_node(2).angle_from_lte};
    const BeamWeights bw = lcmv_weights(6, s.ues[0].angle_from_lte, nulls);
    const CoexState st = assess(s, d, bw);
    CHECK(st.N_cs == 4);
    CHECK(st.alpha_l == 1.0 / 3);
    CHECK(st.alpha_w == 1.0);
    CHECK_FALSE(st.sigma_w);
    CHECK(st.tau_w == 0.0);
    CHECK(st.tau_l == doctest::Approx((2.0 / 3) * (2.0 / 3) * 40));
    CHECK(d.null_count() == 2);
    CHECK(d.nulled_sta_count() == 1);
  }
}
