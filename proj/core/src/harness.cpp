#include "coexnull/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

#include <nlohmann/json.hpp>

#include "coexnull/array.hpp"
#include "coexnull/error.hpp"
#include "coexnull/units.hpp"

namespace coexnull {

namespace {

using Fail = std::function<void(std::string_view field, const std::string& msg)>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_config(const ExperimentConfig& c, const Fail& fail) {
  try {
    c.radio.validate();
  } catch (const InvalidArgument& e) {
    fail("radio", e.what());
  }
  if (c.d_sep.empty()) fail("sweep.d_sep", "must list at least one separation");
  for (const double d : c.d_sep) {
    if (!(d >= kMinNodeDistance)) fail("sweep.d_sep", "separations must be >= 1 m");
  }
  if (c.K.empty()) fail("sweep.K", "must list at least one antenna count");
  for (const int k : c.K) {
    if (k < 1) fail("sweep.K", "antenna counts must be >= 1");
  }
  if (c.N.empty()) fail("sweep.N", "must list at least one station count");
  for (const int n : c.N) {
    if (n < 0) fail("sweep.N", "station counts must be >= 0");
  }
  if (c.M < 1) fail("M", "must be >= 1");
  if (!(c.radius_lte >= kMinNodeDistance)) fail("radius_lte", "must be >= 1 m");
  if (!(c.radius_wifi >= kMinNodeDistance)) fail("radius_wifi", "must be >= 1 m");
  if (c.policies.empty()) fail("policies", "must list at least one policy");
  if (c.methods.empty()) fail("methods", "must list at least one method");
  if (c.runs < 1) fail("runs", "must be >= 1");
  if (c.format != "csv" && c.format != "json") fail("format", "must be csv or json");
  if (std::find(c.methods.begin(), c.methods.end(), Method::Exhaustive) !=
      c.methods.end()) {
    for (const int n : c.N) {
      // Every WiFi node may be sensed, so the AP and all N stations count.
      if (n + 1 > 20) {
        fail("sweep.N", "EXHAUSTIVE requires N + 1 <= 20 (2^20 subset guard)");
      }
    }
  }
}

// 1-based line of the last component of a dotted key path, or 0.
int line_of(std::string_view text, std::string_view path) {
  std::size_t pos = 0;
  while (!path.empty()) {
    const std::size_t dot = path.find('.');
    const std::string key = "\"" + std::string(path.substr(0, dot)) + "\"";
    std::size_t found = text.find(key, pos);
    while (found != std::string_view::npos) {
      std::size_t after = found + key.size();
      while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) {
        ++after;
      }
      if (after < text.size() && text[after] == ':') break;
      found = text.find(key, found + 1);
    }
    if (found == std::string_view::npos) return 0;
    pos = found;
    path = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
  }
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

int line_of_offset(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string located(std::string_view origin, int line, const std::string& msg) {
  std::ostringstream out;
  out << origin;
  if (line > 0) out << ':' << line;
  out << ": " << msg;
  return out.str();
}

template <typename T>
void read_field(const nlohmann::json& obj, const char* key, std::string_view path,
                T& out, const Fail& fail) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(path, std::string("wrong type: ") + e.what());
  }
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<std::string_view> known,
                    std::string_view prefix, const Fail& fail) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      const std::string path = prefix.empty() ? key : std::string(prefix) + "." + key;
      fail(path, "unknown key '" + key + "'");
    }
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  check_config(*this, [](std::string_view field, const std::string& msg) {
    throw InvalidArgument(std::string(field) + ": " + msg);
  });
}

ExperimentConfig parse_config(std::string_view text, std::string_view origin) {
  const Fail fail = [&](std::string_view field, const std::string& msg) {
    throw InvalidArgument(located(origin, line_of(text, field),
                                  std::string(field) + ": " + msg));
  };

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(located(origin, line_of_offset(text, e.byte), e.what()));
  }
  if (!doc.is_object()) {
    throw InvalidArgument(located(origin, 1, "top level must be a JSON object"));
  }

  reject_unknown(doc,
                 {"radio", "sweep", "M", "radius_lte", "radius_wifi", "policies",
                  "methods", "runs", "base_seed", "output_path", "format"},
                 "", fail);

  ExperimentConfig c;
  if (doc.contains("radio")) {
    const auto& radio = doc.at("radio");
    if (!radio.is_object()) fail("radio", "must be an object");
    reject_unknown(radio,
                   {"P_l", "P_w", "Gamma_w", "Gamma_l", "B", "gamma", "eta0", "PL0", "K",
                    "T_csat", "dT_down", "T_on_init", "T_off_init"},
                   "radio", fail);
    for (const auto& [key, value] : radio.items()) {
      if (!value.is_number()) fail("radio." + key, "must be a number");
    }
    c.radio = radio.get<RadioParams>();
  }
  if (doc.contains("sweep")) {
    const auto& sweep = doc.at("sweep");
    if (!sweep.is_object()) fail("sweep", "must be an object");
    reject_unknown(sweep, {"d_sep", "K", "N"}, "sweep", fail);
    read_field(sweep, "d_sep", "sweep.d_sep", c.d_sep, fail);
    read_field(sweep, "K", "sweep.K", c.K, fail);
    read_field(sweep, "N", "sweep.N", c.N, fail);
  }
  read_field(doc, "M", "M", c.M, fail);
  read_field(doc, "radius_lte", "radius_lte", c.radius_lte, fail);
  read_field(doc, "radius_wifi", "radius_wifi", c.radius_wifi, fail);
  read_field(doc, "runs", "runs", c.runs, fail);
  read_field(doc, "base_seed", "base_seed", c.base_seed, fail);
  read_field(doc, "output_path", "output_path", c.output_path, fail);
  read_field(doc, "format", "format", c.format, fail);

  std::vector<std::string> names;
  if (doc.contains("policies")) {
    read_field(doc, "policies", "policies", names, fail);
    c.policies.clear();
    for (const auto& n : names) {
      try {
        c.policies.push_back(policy_from_string(n));
      } catch (const InvalidArgument& e) {
        fail("policies", e.what());
      }
    }
  }
  if (doc.contains("methods")) {
    names.clear();
    read_field(doc, "methods", "methods", names, fail);
    c.methods.clear();
    for (const auto& n : names) {
      try {
        c.methods.push_back(method_from_string(n));
      } catch (const InvalidArgument& e) {
        fail("methods", e.what());
      }
    }
  }

  check_config(c, fail);
  return c;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t d_index,
                          std::size_t k_index, std::size_t n_index, int run) {
  std::uint64_t h = splitmix64(base_seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(d_index));
  h = splitmix64(h ^ static_cast<std::uint64_t>(k_index));
  h = splitmix64(h ^ static_cast<std::uint64_t>(n_index));
  return splitmix64(h ^ static_cast<std::uint64_t>(run));
}

std::optional<double> metric(const TrialResult& t, std::string_view name) {
  if (name == "lte_throughput") return t.lte_throughput;
  if (name == "wifi_mean_throughput") return t.wifi_mean_throughput;
  if (name == "alpha_l") return t.alpha_l;
  if (name == "alpha_w") return t.alpha_w;
  if (name == "tau_l") return t.tau_l;
  if (name == "tau_w") return t.tau_w;
  if (name == "nulled_sta_count") return static_cast<double>(t.nulled_sta_count);
  if (name == "ap_nulled") return t.ap_nulled ? 1.0 : 0.0;
  if (name == "gain_lte") return t.gain_lte;
  if (name == "gain_wifi") return t.gain_wifi;
  throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

std::optional<MetricStat> AggregateRow::stat(std::string_view name) const {
  for (std::size_t i = 0; i < std::size(kTrialMetrics); ++i) {
    if (kTrialMetrics[i] == name) return i < stats.size() ? stats[i] : std::nullopt;
  }
  throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

TrialResult make_trial(const Scenario& scenario, Policy policy, Method method,
                       const NullingSolution& solution,
                       const NullingSolution& baseline) {
  TrialResult t;
  t.seed = scenario.seed;
  t.d_sep = scenario.d_sep;
  t.K = scenario.params.K;
  t.N = scenario.num_stas();
  t.policy = policy;
  t.method = method;
  const ThroughputReport& r = solution.report;
  t.lte_throughput = r.lte_throughput;
  t.wifi_mean_throughput = r.wifi_mean_throughput;
  t.alpha_l = r.alpha_l;
  t.alpha_w = r.alpha_w;
  t.tau_l = r.coex.tau_l;
  t.tau_w = r.coex.tau_w;
  t.nulled_sta_count = solution.decision.nulled_sta_count();
  t.ap_nulled = solution.decision.ap_nulled();
  if (method != Method::NoNull) {
    const ThroughputReport& b = baseline.report;
    t.gain_lte = t.lte_throughput / b.lte_throughput - 1.0;
    t.gain_wifi = b.wifi_mean_throughput > 0.0
                      ? t.wifi_mean_throughput / b.wifi_mean_throughput - 1.0
                      : 0.0;
  }
  return t;
}

std::vector<AggregateRow> aggregate(const std::vector<TrialResult>& trials) {
  using Key = std::tuple<double, int, int, int, int>;
  std::map<Key, std::vector<const TrialResult*>> cells;
  for (const auto& t : trials) {
    cells[{t.d_sep, t.K, t.N, static_cast<int>(t.policy), static_cast<int>(t.method)}]
        .push_back(&t);
  }

  std::vector<AggregateRow> rows;
  rows.reserve(cells.size());
  for (const auto& [key, members] : cells) {
    AggregateRow row;
    row.d_sep = std::get<0>(key);
    row.K = std::get<1>(key);
    row.N = std::get<2>(key);
    row.policy = static_cast<Policy>(std::get<3>(key));
    row.method = static_cast<Method>(std::get<4>(key));
    row.runs = static_cast<int>(members.size());
    for (const std::string_view name : kTrialMetrics) {
      std::vector<double> values;
      values.reserve(members.size());
      for (const TrialResult* t : members) {
        if (auto v = metric(*t, name)) values.push_back(*v);
      }
      if (values.empty()) {
        row.stats.emplace_back(std::nullopt);
        continue;
      }
      // Sorting first makes the floating-point sums independent of trial order.
      std::sort(values.begin(), values.end());
      const auto n = static_cast<double>(values.size());
      double sum = 0.0;
      for (const double v : values) sum += v;
      const double mean = sum / n;
      double ss = 0.0;
      for (const double v : values) ss += (v - mean) * (v - mean);
      const double sd = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
      row.stats.push_back(MetricStat{mean, sd / std::sqrt(n), static_cast<int>(values.size())});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SweepResult run_sweep(const ExperimentConfig& config) {
  config.validate();
  SweepResult out;
  for (std::size_t di = 0; di < config.d_sep.size(); ++di) {
    for (std::size_t ki = 0; ki < config.K.size(); ++ki) {
      for (std::size_t ni = 0; ni < config.N.size(); ++ni) {
        RadioParams params = config.radio;
        params.K = config.K[ki];
        for (const Policy policy : config.policies) {
          for (int run = 0; run < config.runs; ++run) {
            const std::uint64_t seed = derive_seed(config.base_seed, di, ki, ni, run);
            const Scenario scenario =
                sample_scenario(params, config.d_sep[di], config.M, config.N[ni],
                                config.radius_lte, config.radius_wifi, seed);
            const int served = run % config.M;
            const NullingSolution base = solve_nonull(scenario, policy, served);
            for (const Method method : config.methods) {
              if (method == Method::NoNull) {
                out.trials.push_back(make_trial(scenario, policy, method, base, base));
              } else {
                const NullingSolution sol = solve(scenario, policy, method, served);
                out.trials.push_back(make_trial(scenario, policy, method, sol, base));
              }
            }
          }
        }
      }
    }
  }
  out.aggregates = aggregate(out.trials);
  return out;
}

std::vector<NullDepthRow> null_depth_survey(const std::vector<int>& Ks,
                                            int configs_per_k,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  constexpr int kGridPoints = 6284;  // about 1 mrad spacing

  std::vector<NullDepthRow> rows;
  for (const int K : Ks) {
    if (K < 1) throw InvalidArgument("null_depth_survey: K must be >= 1");
    for (int c = 0; c < configs_per_k; ++c) {
      for (;;) {
        const double served = kTwoPi * uniform();
        const int nulls = static_cast<int>(uniform() * K);  // 0..K-1
        std::vector<double> angles(static_cast<std::size_t>(nulls));
        for (auto& a : angles) a = kTwoPi * uniform();
        BeamWeights w;
        try {
          w = lcmv_weights(K, served, angles);
        } catch (const InfeasibleConfiguration&) {
          continue;
        }
        NullDepthRow row;
        row.K = K;
        row.nulls = nulls;
        row.served_theta = served;
        for (const double a : angles) {
          row.worst_null_gain = std::max(row.worst_null_gain, array_gain(w, a));
        }
        row.served_gain = array_gain(w, served);
        row.served_gain_unconstrained = array_gain(lcmv_weights(K, served, {}), served);
        for (int g = 0; g < kGridPoints; ++g) {
          const double t = kTwoPi * g / kGridPoints;
          row.peak_gain = std::max(row.peak_gain, array_gain(w, t));
        }
        rows.push_back(row);
        break;
      }
    }
  }
  return rows;
}

}  // namespace coexnull
