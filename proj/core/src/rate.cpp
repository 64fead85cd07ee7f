#include "coexnull/rate.hpp"

#include <cmath>
#include <string>

#include "coexnull/error.hpp"
#include "coexnull/units.hpp"

namespace coexnull {

namespace {

double shannon(double bandwidth, double sinr) {
  return bandwidth * std::log2(1.0 + sinr);
}

// Interference-free WiFi downlink rate of a station.
double sta_clear_rate(const Scenario& s, const Node& sta) {
  const RadioParams& p = s.params;
  const double signal = dbm_to_watts(p.P_w) * p.channel_gain(sta.dist_from_wifi);
  return shannon(p.B, signal / p.noise_watts());
}

double sta_throughput(const Scenario& s, const Node& sta,
                      const BeamWeights& weights, double alpha_l,
                      bool time_sharing_only) {
  const RadioParams& p = s.params;
  const double clear = sta_clear_rate(s, sta);
  if (time_sharing_only) return (1.0 - alpha_l) * clear;

  const double signal = dbm_to_watts(p.P_w) * p.channel_gain(sta.dist_from_wifi);
  const double lte_interference = dbm_to_watts(p.P_l) *
                                  p.channel_gain(sta.dist_from_lte) *
                                  array_gain(weights, sta.angle_from_lte);
  const double during_on = shannon(p.B, signal / (p.noise_watts() + lte_interference));
  return alpha_l * during_on + (1.0 - alpha_l) * clear;
}

ThroughputReport infeasible(ThroughputReport report) {
  report.feasible = false;
  report.objective_value = 0.0;
  return report;
}

}  // namespace

std::string_view to_string(Policy policy) {
  switch (policy) {
    case Policy::MaxSum: return "MaxSum";
    case Policy::MaxLte: return "MaxLTE";
    case Policy::MaxWifi: return "MaxWiFi";
  }
  return "?";
}

Policy policy_from_string(std::string_view name) {
  if (name == "MaxSum") return Policy::MaxSum;
  if (name == "MaxLTE") return Policy::MaxLte;
  if (name == "MaxWiFi") return Policy::MaxWifi;
  throw InvalidArgument("unknown policy '" + std::string(name) +
                        "' (expected MaxSum, MaxLTE or MaxWiFi)");
}

PolicyWeights weights_for(Policy policy) {
  switch (policy) {
    case Policy::MaxSum: return {0.5, 0.5, true};
    case Policy::MaxLte: return {1.0, 0.0, false};
    case Policy::MaxWifi: return {0.0, 1.0, false};
  }
  throw InvalidArgument("weights_for: unknown policy");
}

double lte_rate(const Scenario& scenario, int ue_index,
                const BeamWeights& weights, bool wifi_ap_blocked) {
  if (ue_index < 0 || ue_index >= static_cast<int>(scenario.ues.size())) {
    throw InvalidArgument("lte_rate: UE index " + std::to_string(ue_index) +
                          " out of range");
  }
  const RadioParams& p = scenario.params;
  const Node& ue = scenario.ues[static_cast<std::size_t>(ue_index)];
  const double signal = dbm_to_watts(p.P_l) * p.channel_gain(ue.dist_from_lte) *
                        array_gain(weights, ue.angle_from_lte);
  double noise = p.noise_watts();
  if (!wifi_ap_blocked) {
    noise += dbm_to_watts(p.P_w) * p.channel_gain(ue.dist_from_wifi);
  }
  return shannon(p.B, signal / noise);
}

double wifi_throughput(const Scenario& scenario, int sta_index,
                       const BeamWeights& weights,
                       const NullingDecision& decision, double alpha_l) {
  if (sta_index < 1 || sta_index > scenario.num_stas()) {
    throw InvalidArgument("wifi_throughput: STA index " +
                          std::to_string(sta_index) + " out of range");
  }
  const bool time_only = !decision.ap_nulled() && ap_senses_bs(scenario, weights);
  return sta_throughput(scenario, scenario.wifi_node(sta_index), weights,
                        alpha_l, time_only);
}

ThroughputReport evaluate(const Scenario& scenario,
                          const NullingDecision& decision,
                          const PolicyWeights& policy,
                          std::optional<double> baseline_wifi) {
  const int n = scenario.num_stas();
  if (static_cast<int>(decision.x.size()) != n + 1) {
    throw InvalidArgument("evaluate: decision has " +
                          std::to_string(decision.x.size()) +
                          " entries, scenario needs " + std::to_string(n + 1));
  }
  if (decision.y < 0 || decision.y >= static_cast<int>(scenario.ues.size())) {
    throw InvalidArgument("evaluate: served UE index out of range");
  }
  if (policy.protect_wifi && !baseline_wifi) {
    throw InvalidArgument("evaluate: policy requires a NoNull WiFi baseline");
  }

  ThroughputReport report;
  const std::vector<bool> sensed = bs_sensing_flags(scenario);
  std::vector<double> null_angles;
  for (int i = 0; i <= n; ++i) {
    if (!decision.x[static_cast<std::size_t>(i)]) continue;
    if (!sensed[static_cast<std::size_t>(i)]) return infeasible(report);
    null_angles.push_back(scenario.wifi_node(i).angle_from_lte);
  }
  if (static_cast<int>(null_angles.size()) > scenario.params.K - 1) {
    return infeasible(report);
  }

  const Node& ue = scenario.ues[static_cast<std::size_t>(decision.y)];
  BeamWeights weights;
  try {
    weights = lcmv_weights(scenario.params.K, ue.angle_from_lte, null_angles);
  } catch (const InfeasibleConfiguration&) {
    return infeasible(report);
  }

  report.coex = assess(scenario, decision, weights);
  report.alpha_l = report.coex.alpha_l;
  report.alpha_w = report.coex.alpha_w;

  const bool ap_blocked = report.coex.sigma_w && !decision.ap_nulled();
  report.lte_throughput =
      report.alpha_l * lte_rate(scenario, decision.y, weights, ap_blocked);

  report.wifi_throughput_per_sta.reserve(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double r = sta_throughput(scenario, scenario.wifi_node(i), weights,
                                    report.alpha_l, ap_blocked);
    report.wifi_throughput_per_sta.push_back(r);
    sum += r;
  }
  report.wifi_mean_throughput = n > 0 ? sum / n : 0.0;
  report.objective_value = policy.beta_w * report.wifi_mean_throughput +
                           policy.beta_l * report.lte_throughput;
  report.feasible = true;

  if (policy.protect_wifi &&
      report.wifi_mean_throughput <
          *baseline_wifi - kBaselineTolerance * std::abs(*baseline_wifi)) {
    return infeasible(std::move(report));
  }
  return report;
}

}  // namespace coexnull
