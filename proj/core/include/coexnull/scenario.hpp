#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace coexnull {

/// Radio and duty-cycle parameters shared by both networks.
///
/// Powers and thresholds are in dBm, bandwidth in Hz, noise density in
/// dBm/Hz and all CSAT durations in milliseconds. Defaults follow the
/// evaluation setting (17 dBm on both sides, -82/-72 dBm ED thresholds,
/// 20 MHz channel, 80 ms CSAT cycle starting at 40/40 ms with 5 ms steps).
///
/// Every link sees the same channel: a loss of PL0 dB at 1 m followed by
/// d^-gamma decay.
struct RadioParams {
  double P_l = 17.0;
  double P_w = 17.0;
  double Gamma_w = -82.0;  ///< ED threshold at the LTE-U BS for WiFi signals.
  double Gamma_l = -72.0;  ///< ED threshold at the WiFi AP for LTE-U signals.
  double B = 20e6;
  double gamma = 3.0;
  double eta0 = -174.0;
  double PL0 = 46.7;  ///< Free-space loss at 1 m for a 5.18 GHz carrier.
  int K = 6;
  double T_csat = 80.0;
  double dT_down = 5.0;
  double T_on_init = 40.0;
  double T_off_init = 40.0;

  /// Throws InvalidArgument naming the first violated invariant.
  void validate() const;

  /// Thermal noise power B * eta0 in watts.
  [[nodiscard]] double noise_watts() const;

  /// Linear power gain of a link of the given length.
  [[nodiscard]] double channel_gain(double distance_m) const;

  /// Power received in dBm from a tx_dbm transmitter distance_m away.
  [[nodiscard]] double received_dbm(double tx_dbm, double distance_m) const;

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

enum class Role { LteBs, LteUe, WifiAp, WifiSta };

std::string_view to_string(Role role);
Role role_from_string(std::string_view name);

/// A node in the plane. The LTE-U BS sits at the origin and the WiFi AP at
/// (d_sep, 0), so the AP is always at angle 0 as seen from the BS.
struct Node {
  Role role = Role::WifiSta;
  int index = 0;
  double angle_from_lte = 0.0;  ///< [0, 2*pi), measured from the BS-AP axis.
  double dist_from_lte = 0.0;
  double dist_from_wifi = 0.0;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Scenario {
  RadioParams params;
  double d_sep = 0.0;
  std::vector<Node> ues;
  std::vector<Node> stas;
  Node ap;
  std::uint64_t seed = 0;

  [[nodiscard]] int num_stas() const { return static_cast<int>(stas.size()); }

  /// WiFi node by its index in {AP, STA_1, ..., STA_N}: 0 is the AP.
  [[nodiscard]] const Node& wifi_node(int i) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Closest any node may be to a transmitter, in meters.
inline constexpr double kMinNodeDistance = 1.0;

/// Draws UEs around the BS and STAs around the AP: angle uniform in
/// [0, 2*pi), radial distance uniform in [0, radius] clamped to
/// kMinNodeDistance. A node that lands closer than kMinNodeDistance to the
/// other network's transmitter is redrawn. Deterministic in `seed`.
Scenario sample_scenario(const RadioParams& params, double d_sep, int M, int N,
                         double radius_lte, double radius_wifi,
                         std::uint64_t seed);

void to_json(nlohmann::json& j, const RadioParams& p);
void from_json(const nlohmann::json& j, RadioParams& p);
void to_json(nlohmann::json& j, const Node& n);
void from_json(const nlohmann::json& j, Node& n);
void to_json(nlohmann::json& j, const Scenario& s);
void from_json(const nlohmann::json& j, Scenario& s);

}  // namespace coexnull
