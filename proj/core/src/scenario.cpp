#include "coexnull/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "coexnull/error.hpp"
#include "coexnull/units.hpp"

namespace coexnull {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

// 53 random mantissa bits; identical on every standard library, unlike
// std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double wrap_angle(double theta) {
  double wrapped = std::fmod(theta, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

constexpr int kMaxPlacementAttempts = 100000;

struct Polar {
  double angle;
  double radius;
};

Polar draw_polar(std::mt19937_64& rng, double coverage) {
  const double angle = kTwoPi * uniform01(rng);
  const double radius = std::max(coverage * uniform01(rng), kMinNodeDistance);
  return {angle, radius};
}

Node place_ue(std::mt19937_64& rng, int index, double d_sep, double coverage) {
  for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
    const auto [angle, r] = draw_polar(rng, coverage);
    const double x = r * std::cos(angle);
    const double y = r * std::sin(angle);
    const double to_ap = std::hypot(x - d_sep, y);
    if (to_ap < kMinNodeDistance) continue;
    return Node{Role::LteUe, index, angle, r, to_ap};
  }
  throw InvalidArgument("sample_scenario: cannot place UE away from the AP");
}

Node place_sta(std::mt19937_64& rng, int index, double d_sep,
               double coverage) {
  for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
    const auto [angle, r] = draw_polar(rng, coverage);
    const double x = d_sep + r * std::cos(angle);
    const double y = r * std::sin(angle);
    const double to_bs = std::hypot(x, y);
    if (to_bs < kMinNodeDistance) continue;
    return Node{Role::WifiSta, index, wrap_angle(std::atan2(y, x)), to_bs, r};
  }
  throw InvalidArgument("sample_scenario: cannot place STA away from the BS");
}

}  // namespace

void RadioParams::validate() const {
  require(std::isfinite(P_l) && std::isfinite(P_w),
          "RadioParams: P_l and P_w must be finite");
  require(std::isfinite(Gamma_w) && std::isfinite(Gamma_l),
          "RadioParams: ED thresholds must be finite");
  require(std::isfinite(eta0), "RadioParams: eta0 must be finite");
  require(std::isfinite(PL0), "RadioParams: PL0 must be finite");
  require(B > 0.0 && std::isfinite(B), "RadioParams: B must be > 0");
  require(gamma > 0.0 && std::isfinite(gamma),
          "RadioParams: gamma must be > 0");
  require(K >= 1, "RadioParams: K must be >= 1");
  require(T_csat > 0.0, "RadioParams: T_csat must be > 0");
  require(dT_down > 0.0 && dT_down <= T_csat,
          "RadioParams: dT_down must lie in (0, T_csat]");
  require(T_on_init >= 0.0 && T_off_init >= 0.0,
          "RadioParams: CSAT periods must be non-negative");
  require(std::abs(T_on_init + T_off_init - T_csat) <= 1e-9 * T_csat,
          "RadioParams: T_on_init + T_off_init must equal T_csat");
}

double RadioParams::noise_watts() const {
  return dbm_to_watts(eta0 + 10.0 * std::log10(B));
}

double RadioParams::channel_gain(double distance_m) const {
  return db_to_linear(-PL0) * pathloss_gain(distance_m, gamma);
}

double RadioParams::received_dbm(double tx_dbm, double distance_m) const {
  return coexnull::received_dbm(tx_dbm, distance_m, gamma) - PL0;
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::LteBs: return "LTE_BS";
    case Role::LteUe: return "LTE_UE";
    case Role::WifiAp: return "WIFI_AP";
    case Role::WifiSta: return "WIFI_STA";
  }
  return "?";
}

Role role_from_string(std::string_view name) {
  if (name == "LTE_BS") return Role::LteBs;
  if (name == "LTE_UE") return Role::LteUe;
  if (name == "WIFI_AP") return Role::WifiAp;
  if (name == "WIFI_STA") return Role::WifiSta;
  throw InvalidArgument("unknown node role '" + std::string(name) + "'");
}

const Node& Scenario::wifi_node(int i) const {
  if (i == 0) return ap;
  if (i < 0 || i > num_stas()) {
    throw InvalidArgument("wifi_node: index " + std::to_string(i) +
                          " out of range");
  }
  return stas[static_cast<std::size_t>(i - 1)];
}

Scenario sample_scenario(const RadioParams& params, double d_sep, int M, int N,
                         double radius_lte, double radius_wifi,
                         std::uint64_t seed) {
  params.validate();
  require(d_sep >= kMinNodeDistance,
          "sample_scenario: d_sep must be >= 1 m");
  require(M >= 1, "sample_scenario: M must be >= 1");
  require(N >= 0, "sample_scenario: N must be >= 0");
  require(radius_lte >= kMinNodeDistance && radius_wifi >= kMinNodeDistance,
          "sample_scenario: coverage radii must be >= 1 m");

  Scenario s;
  s.params = params;
  s.d_sep = d_sep;
  s.seed = seed;
  s.ap = Node{Role::WifiAp, 0, 0.0, d_sep, 0.0};

  std::mt19937_64 rng(seed);
  s.ues.reserve(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    s.ues.push_back(place_ue(rng, j + 1, d_sep, radius_lte));
  }
  s.stas.reserve(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    s.stas.push_back(place_sta(rng, i + 1, d_sep, radius_wifi));
  }
  return s;
}

void to_json(nlohmann::json& j, const RadioParams& p) {
  j = nlohmann::json{{"P_l", p.P_l},
                     {"P_w", p.P_w},
                     {"Gamma_w", p.Gamma_w},
                     {"Gamma_l", p.Gamma_l},
                     {"B", p.B},
                     {"gamma", p.gamma},
                     {"eta0", p.eta0},
                     {"PL0", p.PL0},
                     {"K", p.K},
                     {"T_csat", p.T_csat},
                     {"dT_down", p.dT_down},
                     {"T_on_init", p.T_on_init},
                     {"T_off_init", p.T_off_init}};
}

void from_json(const nlohmann::json& j, RadioParams& p) {
  const RadioParams d;
  p.P_l = j.value("P_l", d.P_l);
  p.P_w = j.value("P_w", d.P_w);
  p.Gamma_w = j.value("Gamma_w", d.Gamma_w);
  p.Gamma_l = j.value("Gamma_l", d.Gamma_l);
  p.B = j.value("B", d.B);
  p.gamma = j.value("gamma", d.gamma);
  p.eta0 = j.value("eta0", d.eta0);
  p.PL0 = j.value("PL0", d.PL0);
  p.K = j.value("K", d.K);
  p.T_csat = j.value("T_csat", d.T_csat);
  p.dT_down = j.value("dT_down", d.dT_down);
  p.T_on_init = j.value("T_on_init", d.T_on_init);
  p.T_off_init = j.value("T_off_init", d.T_off_init);
}

void to_json(nlohmann::json& j, const Node& n) {
  j = nlohmann::json{{"role", to_string(n.role)},
                     {"index", n.index},
                     {"angle_from_lte", n.angle_from_lte},
                     {"dist_from_lte", n.dist_from_lte},
                     {"dist_from_wifi", n.dist_from_wifi}};
}

void from_json(const nlohmann::json& j, Node& n) {
  n.role = role_from_string(j.at("role").get<std::string>());
  n.index = j.at("index").get<int>();
  n.angle_from_lte = j.at("angle_from_lte").get<double>();
  n.dist_from_lte = j.at("dist_from_lte").get<double>();
  n.dist_from_wifi = j.at("dist_from_wifi").get<double>();
}

void to_json(nlohmann::json& j, const Scenario& s) {
  j = nlohmann::json{{"params", s.params}, {"d_sep", s.d_sep},
                     {"ues", s.ues},       {"stas", s.stas},
                     {"ap", s.ap},         {"seed", s.seed}};
}

void from_json(const nlohmann::json& j, Scenario& s) {
  s.params = j.at("params").get<RadioParams>();
  s.d_sep = j.at("d_sep").get<double>();
  s.ues = j.at("ues").get<std::vector<Node>>();
  s.stas = j.at("stas").get<std::vector<Node>>();
  s.ap = j.at("ap").get<Node>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.params.validate();
  require(!s.ues.empty(), "Scenario: at least one UE is required");
  require(s.ap.dist_from_lte == s.d_sep,
          "Scenario: ap.dist_from_lte must equal d_sep");
}

}  // namespace coexnull
