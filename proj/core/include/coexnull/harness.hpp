#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coexnull/optimizer.hpp"
#include "coexnull/rate.hpp"
#include "coexnull/scenario.hpp"

namespace coexnull {

struct ExperimentConfig {
  RadioParams radio;
  std::vector<double> d_sep{10, 30, 50, 70, 90, 110, 130};
  std::vector<int> K{6};
  std::vector<int> N{8};
  int M = 1;
  double radius_lte = 50.0;
  double radius_wifi = 50.0;
  std::vector<Policy> policies{Policy::MaxSum};
  std::vector<Method> methods{Method::NoNull, Method::Greedy};
  int runs = 500;
  std::uint64_t base_seed = 1;
  std::string output_path = "results";
  std::string format = "csv";

  /// Throws InvalidArgument with a message naming the offending field.
  void validate() const;
};

/// Parses a JSON experiment description. Keys that are absent keep their
/// defaults. Errors are reported as "<origin>:<line>: message".
ExperimentConfig parse_config(std::string_view text,
                              std::string_view origin = "<config>");
ExperimentConfig load_config_file(const std::string& path);

/// Stable 64-bit seed of one trial: a splitmix64 chain over
/// (base_seed, d index, K index, N index, run).
std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t d_index,
                          std::size_t k_index, std::size_t n_index, int run);

struct TrialResult {
  std::uint64_t seed = 0;
  double d_sep = 0.0;
  int K = 0;
  int N = 0;
  Policy policy = Policy::MaxSum;
  Method method = Method::NoNull;
  double lte_throughput = 0.0;
  double wifi_mean_throughput = 0.0;
  double alpha_l = 0.0;
  double alpha_w = 0.0;
  double tau_l = 0.0;
  double tau_w = 0.0;
  int nulled_sta_count = 0;
  bool ap_nulled = false;
  /// Relative to the NoNull run on the same scenario; unset for NoNull.
  std::optional<double> gain_lte;
  std::optional<double> gain_wifi;
};

/// Numeric TrialResult fields in emission order.
inline constexpr std::string_view kTrialMetrics[] = {
    "lte_throughput", "wifi_mean_throughput", "alpha_l",   "alpha_w",
    "tau_l",          "tau_w",                "nulled_sta_count",
    "ap_nulled",      "gain_lte",             "gain_wifi"};

/// Value of a metric named in kTrialMetrics; nullopt for unset gains.
std::optional<double> metric(const TrialResult& trial, std::string_view name);

struct MetricStat {
  double mean = 0.0;
  double se = 0.0;  ///< Sample standard deviation / sqrt(count).
  int count = 0;
};

struct AggregateRow {
  double d_sep = 0.0;
  int K = 0;
  int N = 0;
  Policy policy = Policy::MaxSum;
  Method method = Method::NoNull;
  int runs = 0;
  /// Parallel to kTrialMetrics; nullopt when no trial carries the metric.
  std::vector<std::optional<MetricStat>> stats;

  [[nodiscard]] std::optional<MetricStat> stat(std::string_view name) const;
};

struct SweepResult {
  std::vector<TrialResult> trials;
  std::vector<AggregateRow> aggregates;
};

/// Builds the trial for one solution, pairing it with the same-scenario
/// NoNull solution for the gain fields.
TrialResult make_trial(const Scenario& scenario, Policy policy, Method method,
                       const NullingSolution& solution,
                       const NullingSolution& baseline);

/// Mean and standard error of every metric per (d_sep, K, N, policy,
/// method) cell. Independent of trial order; cells are sorted by key.
std::vector<AggregateRow> aggregate(const std::vector<TrialResult>& trials);

/// Runs every (d_sep, K, N, policy) cell for config.runs scenarios. Trials
/// are ordered by cell, then run, then method.
SweepResult run_sweep(const ExperimentConfig& config);

struct NullDepthRow {
  int K = 0;
  int nulls = 0;
  double served_theta = 0.0;
  double worst_null_gain = 0.0;
  double served_gain = 0.0;
  double served_gain_unconstrained = 0.0;
  double peak_gain = 0.0;
};

/// Random LCMV configurations: for each K, `configs_per_k` draws of a
/// served angle and 0..K-1 null angles. Infeasible draws are redrawn.
std::vector<NullDepthRow> null_depth_survey(const std::vector<int>& Ks,
                                            int configs_per_k,
                                            std::uint64_t seed);

}  // namespace coexnull
