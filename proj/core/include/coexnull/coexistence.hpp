#pragma once

#include <span>
#include <vector>

#include "coexnull/array.hpp"
#include "coexnull/scenario.hpp"

namespace coexnull {

/// Nulling configuration of the LTE-U BS.
///
/// x has one entry per WiFi node: x[0] is the AP, x[i] (i >= 1) is STA i.
/// y is the index of the UE served in this slot.
struct NullingDecision {
  std::vector<bool> x;
  int y = 0;

  /// All-zeros decision (NoNull) for a scenario with n_stas stations.
  static NullingDecision none(int n_stas, int served_ue = 0);

  [[nodiscard]] bool ap_nulled() const { return !x.empty() && x[0]; }
  [[nodiscard]] int null_count() const;
  [[nodiscard]] int nulled_sta_count() const;

  friend bool operator==(const NullingDecision&,
                         const NullingDecision&) = default;
};

/// Carrier-sensing flags, airtimes and access delays under one decision.
struct CoexState {
  bool sigma_w = false;
  std::vector<bool> sigma_l;
  int N_cs = 0;
  double alpha_l = 1.0;
  double alpha_w = 1.0;
  double tau_l = 0.0;
  double tau_w = 0.0;
};

/// True iff the BS receives WiFi node i (0 = AP) at or above Gamma_w.
bool bs_senses_node(const Scenario& scenario, int wifi_index);

/// sigma_l for every WiFi node; depends on geometry only.
std::vector<bool> bs_sensing_flags(const Scenario& scenario);

/// True iff the AP receives the precoded LTE-U signal at or above Gamma_l.
bool ap_senses_bs(const Scenario& scenario, const BeamWeights& weights);

/// 1 / ((N_cs - nulled_sensed) + 1). Throws InvalidArgument if
/// nulled_sensed is negative or exceeds N_cs.
double airtime_lte(int N_cs, int nulled_sensed);

/// WiFi airtime by carrier-sense regime: 1 if the AP does not defer to the
/// BS (not sensing it, or nulled), otherwise 1 - alpha_l.
double airtime_wifi(bool sigma_w, bool ap_nulled, double alpha_l);

/// CSAT on-period adaptation. Returns steps + 1 values; element 0 is
/// T_on_init and element k is T_on after the k-th adaptation opportunity.
/// On every step with mu_above_threshold[k-1] set,
///   T_on <- max(T_on - dT_down, T_csat / (N_cs + 1)).
std::vector<double> csat_trace(const RadioParams& params, int N_cs,
                               std::span<const bool> mu_above_threshold);

/// csat_trace under backlogged WiFi traffic (utilization always above the
/// trigger threshold).
std::vector<double> csat_trace_backlogged(const RadioParams& params, int N_cs,
                                          int steps);

struct AccessDelay {
  double tau_l = 0.0;
  double tau_w = 0.0;
};

/// Expected channel-access delays in ms:
///   tau_l = (1 - alpha_l)^2 * T_csat / 2,  tau_w = alpha_l^2 * T_csat / 2.
/// When the AP does not defer to the BS, tau_w is 0.
AccessDelay access_delay(double alpha_l, double T_csat,
                         bool ap_defers = true);

/// Full carrier-sense/airtime/delay snapshot for a decision whose precoder
/// is `weights`. Does not check decision admissibility.
CoexState assess(const Scenario& scenario, const NullingDecision& decision,
                 const BeamWeights& weights);

}  // namespace coexnull
