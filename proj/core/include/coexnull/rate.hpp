#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "coexnull/array.hpp"
#include "coexnull/coexistence.hpp"
#include "coexnull/scenario.hpp"

namespace coexnull {

enum class Policy { MaxSum, MaxLte, MaxWifi };

std::string_view to_string(Policy policy);
Policy policy_from_string(std::string_view name);

struct PolicyWeights {
  double beta_l = 0.5;
  double beta_w = 0.5;
  /// WiFi mean throughput may not fall below the NoNull baseline.
  bool protect_wifi = true;
};

PolicyWeights weights_for(Policy policy);

struct ThroughputReport {
  double lte_throughput = 0.0;
  std::vector<double> wifi_throughput_per_sta;
  double wifi_mean_throughput = 0.0;
  double objective_value = 0.0;
  double alpha_l = 0.0;
  double alpha_w = 0.0;
  bool feasible = false;
  CoexState coex;
};

/// Shannon rate (bit/s) of UE `ue_index` under `weights`. When the AP is
/// not blocked it transmits concurrently and adds P_w d_{j,w}^-gamma to the
/// noise floor.
double lte_rate(const Scenario& scenario, int ue_index,
                const BeamWeights& weights, bool wifi_ap_blocked);

/// Downlink throughput (bit/s) of STA `sta_index` (1-based, as in
/// NullingDecision::x).
double wifi_throughput(const Scenario& scenario, int sta_index,
                       const BeamWeights& weights,
                       const NullingDecision& decision, double alpha_l);

/// Relative tolerance used when comparing against the NoNull WiFi baseline.
inline constexpr double kBaselineTolerance = 1e-12;

/// Evaluates a nulling decision. Inadmissible decisions (unsensed node
/// nulled, antenna budget exceeded, unrealizable precoder, WiFi degraded
/// under a protecting policy) yield feasible == false and a zero objective.
///
/// Throws InvalidArgument if the decision's shape does not match the
/// scenario or if a protecting policy is evaluated without a baseline.
ThroughputReport evaluate(const Scenario& scenario,
                          const NullingDecision& decision,
                          const PolicyWeights& policy,
                          std::optional<double> baseline_wifi);

}  // namespace coexnull
