#include "coexnull/emit.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <span>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "coexnull/coexistence.hpp"
#include "coexnull/error.hpp"

namespace coexnull {

namespace {

constexpr std::string_view kTrialKeys[] = {"seed", "d_sep", "K",      "N",
                                           "policy", "method"};
constexpr std::string_view kAggregateKeys[] = {"d_sep",  "K",      "N",
                                               "policy", "method", "runs"};

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string{};
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void write_header(std::ostream& out, std::span<const std::string_view> keys,
                  bool with_se) {
  bool first = true;
  for (const auto k : keys) {
    out << (first ? "" : ",") << k;
    first = false;
  }
  for (const auto m : kTrialMetrics) {
    if (with_se) {
      out << ',' << m << "_mean," << m << "_se";
    } else {
      out << ',' << m;
    }
  }
  out << '\n';
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  body(out);
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string format_double(double value) { return fmt::format("{:.17g}", value); }

void write_trials_csv(std::ostream& out, const std::vector<TrialResult>& trials) {
  write_header(out, kTrialKeys, false);
  for (const auto& t : trials) {
    out << t.seed << ',' << format_double(t.d_sep) << ',' << t.K << ',' << t.N << ','
        << to_string(t.policy) << ',' << to_string(t.method) << ','
        << format_double(t.lte_throughput) << ','
        << format_double(t.wifi_mean_throughput) << ',' << format_double(t.alpha_l)
        << ',' << format_double(t.alpha_w) << ',' << format_double(t.tau_l) << ','
        << format_double(t.tau_w) << ',' << t.nulled_sta_count << ','
        << (t.ap_nulled ? 1 : 0) << ',' << optional_cell(t.gain_lte) << ','
        << optional_cell(t.gain_wifi) << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  write_header(out, kAggregateKeys, true);
  for (const auto& r : rows) {
    out << format_double(r.d_sep) << ',' << r.K << ',' << r.N << ','
        << to_string(r.policy) << ',' << to_string(r.method) << ',' << r.runs;
    for (const auto& s : r.stats) {
      if (s) {
        out << ',' << format_double(s->mean) << ',' << format_double(s->se);
      } else {
        out << ",,";
      }
    }
    out << '\n';
  }
}

nlohmann::json trials_to_json(const std::vector<TrialResult>& trials) {
  auto arr = nlohmann::json::array();
  for (const auto& t : trials) {
    arr.push_back({{"seed", t.seed},
                   {"d_sep", t.d_sep},
                   {"K", t.K},
                   {"N", t.N},
                   {"policy", to_string(t.policy)},
                   {"method", to_string(t.method)},
                   {"lte_throughput", t.lte_throughput},
                   {"wifi_mean_throughput", t.wifi_mean_throughput},
                   {"alpha_l", t.alpha_l},
                   {"alpha_w", t.alpha_w},
                   {"tau_l", t.tau_l},
                   {"tau_w", t.tau_w},
                   {"nulled_sta_count", t.nulled_sta_count},
                   {"ap_nulled", t.ap_nulled ? 1 : 0},
                   {"gain_lte", optional_json(t.gain_lte)},
                   {"gain_wifi", optional_json(t.gain_wifi)}});
  }
  return arr;
}

nlohmann::json aggregate_to_json(const std::vector<AggregateRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"d_sep", r.d_sep},
                        {"K", r.K},
                        {"N", r.N},
                        {"policy", to_string(r.policy)},
                        {"method", to_string(r.method)},
                        {"runs", r.runs}};
    for (std::size_t i = 0; i < std::size(kTrialMetrics); ++i) {
      const std::string name(kTrialMetrics[i]);
      const auto& s = r.stats[i];
      j[name + "_mean"] = s ? nlohmann::json(s->mean) : nlohmann::json(nullptr);
      j[name + "_se"] = s ? nlohmann::json(s->se) : nlohmann::json(nullptr);
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<std::filesystem::path> emit(const SweepResult& results,
                                        const std::filesystem::path& dir,
                                        const std::string& format) {
  if (results.trials.empty()) throw Error("emit: no trials to write");
  if (format != "csv" && format != "json") {
    throw InvalidArgument("emit: unknown format '" + format + "'");
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create '" + dir.string() + "': " + ec.message());

  const auto trials_path = dir / ("trials." + format);
  const auto aggregate_path = dir / ("aggregate." + format);
  if (format == "csv") {
    write_file(trials_path, [&](std::ostream& o) { write_trials_csv(o, results.trials); });
    write_file(aggregate_path,
               [&](std::ostream& o) { write_aggregate_csv(o, results.aggregates); });
  } else {
    write_file(trials_path,
               [&](std::ostream& o) { o << trials_to_json(results.trials).dump(2) << '\n'; });
    write_file(aggregate_path, [&](std::ostream& o) {
      o << aggregate_to_json(results.aggregates).dump(2) << '\n';
    });
  }
  return {trials_path, aggregate_path};
}

void write_csat_csv(std::ostream& out, const RadioParams& params,
                    const std::vector<int>& ncs_values, int steps) {
  out << "N_cs,step,T_on\n";
  for (const int ncs : ncs_values) {
    const auto trace = csat_trace_backlogged(params, ncs, steps);
    for (std::size_t k = 0; k < trace.size(); ++k) {
      out << ncs << ',' << k << ',' << format_double(trace[k]) << '\n';
    }
  }
}

void write_null_depth_csv(std::ostream& out, const std::vector<NullDepthRow>& rows) {
  out << "K,nulls,served_theta,worst_null_gain,served_gain,"
         "served_gain_unconstrained,peak_gain\n";
  for (const auto& r : rows) {
    out << r.K << ',' << r.nulls << ',' << format_double(r.served_theta) << ','
        << format_double(r.worst_null_gain) << ',' << format_double(r.served_gain)
        << ',' << format_double(r.served_gain_unconstrained) << ','
        << format_double(r.peak_gain) << '\n';
  }
}

}  // namespace coexnull
