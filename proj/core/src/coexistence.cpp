#include "coexnull/coexistence.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "coexnull/error.hpp"
#include "coexnull/units.hpp"

namespace coexnull {

NullingDecision NullingDecision::none(int n_stas, int served_ue) {
  return NullingDecision{std::vector<bool>(static_cast<std::size_t>(n_stas) + 1, false),
                         served_ue};
}

int NullingDecision::null_count() const {
  return static_cast<int>(std::count(x.begin(), x.end(), true));
}

int NullingDecision::nulled_sta_count() const {
  return null_count() - (ap_nulled() ? 1 : 0);
}

bool bs_senses_node(const Scenario& scenario, int wifi_index) {
  const Node& node = scenario.wifi_node(wifi_index);
  const RadioParams& p = scenario.params;
  return p.received_dbm(p.P_w, node.dist_from_lte) >= p.Gamma_w;
}

std::vector<bool> bs_sensing_flags(const Scenario& scenario) {
  std::vector<bool> flags(static_cast<std::size_t>(scenario.num_stas()) + 1);
  for (int i = 0; i <= scenario.num_stas(); ++i) {
    flags[static_cast<std::size_t>(i)] = bs_senses_node(scenario, i);
  }
  return flags;
}

bool ap_senses_bs(const Scenario& scenario, const BeamWeights& weights) {
  const RadioParams& p = scenario.params;
  const double phi0 = array_gain(weights, scenario.ap.angle_from_lte);
  if (!(phi0 > 0.0)) return false;
  return p.received_dbm(p.P_l, scenario.d_sep) + linear_to_db(phi0) >=
         p.Gamma_l;
}

double airtime_lte(int N_cs, int nulled_sensed) {
  if (nulled_sensed < 0 || nulled_sensed > N_cs) {
    throw InvalidArgument("airtime_lte: nulled count " +
                          std::to_string(nulled_sensed) +
                          " outside [0, N_cs = " + std::to_string(N_cs) + "]");
  }
  return 1.0 / static_cast<double>((N_cs - nulled_sensed) + 1);
}

double airtime_wifi(bool sigma_w, bool ap_nulled, double alpha_l) {
  if (ap_nulled || !sigma_w) return 1.0;
  return 1.0 - alpha_l;
}

std::vector<double> csat_trace(const RadioParams& params, int N_cs,
                               std::span<const bool> mu_above_threshold) {
  if (N_cs < 0) throw InvalidArgument("csat_trace: N_cs must be >= 0");
  if (mu_above_threshold.empty()) {
    throw InvalidArgument("csat_trace: at least one step is required");
  }
  // No same- or other-operator LTE-U cells, and T_min set above the fair
  // share, so the floor is the fair share itself.
  const double t_on_min = params.T_csat / static_cast<double>(N_cs + 1);

  std::vector<double> trace;
  trace.reserve(mu_above_threshold.size() + 1);
  double t_on = params.T_on_init;
  trace.push_back(t_on);
  for (const bool busy : mu_above_threshold) {
    if (busy) t_on = std::max(t_on - params.dT_down, t_on_min);
    trace.push_back(t_on);
  }
  return trace;
}

std::vector<double> csat_trace_backlogged(const RadioParams& params, int N_cs,
                                          int steps) {
  if (steps < 1) throw InvalidArgument("csat_trace: steps must be >= 1");
  // std::span cannot view std::vector<bool>.
  const auto busy = std::make_unique<bool[]>(static_cast<std::size_t>(steps));
  std::fill_n(busy.get(), steps, true);
  return csat_trace(params, N_cs,
                    std::span<const bool>(busy.get(), static_cast<std::size_t>(steps)));
}

AccessDelay access_delay(double alpha_l, double T_csat, bool ap_defers) {
  if (alpha_l < 0.0 || alpha_l > 1.0) {
    throw InvalidArgument("access_delay: alpha_l must lie in [0, 1]");
  }
  const double idle = 1.0 - alpha_l;
  AccessDelay d;
  d.tau_l = idle * idle * T_csat / 2.0;
  d.tau_w = ap_defers ? alpha_l * alpha_l * T_csat / 2.0 : 0.0;
  return d;
}

CoexState assess(const Scenario& scenario, const NullingDecision& decision,
                 const BeamWeights& weights) {
  CoexState st;
  st.sigma_l = bs_sensing_flags(scenario);
  st.N_cs = static_cast<int>(std::count(st.sigma_l.begin(), st.sigma_l.end(), true));

  int nulled_sensed = 0;
  for (std::size_t i = 0; i < decision.x.size() && i < st.sigma_l.size(); ++i) {
    if (decision.x[i] && st.sigma_l[i]) ++nulled_sensed;
  }
  const bool ap_nulled = decision.ap_nulled();
  st.sigma_w = !ap_nulled && ap_senses_bs(scenario, weights);
  st.alpha_l = airtime_lte(st.N_cs, nulled_sensed);
  st.alpha_w = airtime_wifi(st.sigma_w, ap_nulled, st.alpha_l);
  const AccessDelay delay =
      access_delay(st.alpha_l, scenario.params.T_csat, st.sigma_w && !ap_nulled);
  st.tau_l = delay.tau_l;
  st.tau_w = delay.tau_w;
  return st;
}

}  // namespace coexnull
