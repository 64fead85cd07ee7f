#include "coexnull/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "coexnull/error.hpp"

namespace coexnull {

namespace {

struct Incumbent {
  NullingDecision decision;
  ThroughputReport report;
};

Incumbent baseline(const Scenario& scenario, Policy policy, int served_ue) {
  PolicyWeights w = weights_for(policy);
  w.protect_wifi = false;
  NullingDecision none = NullingDecision::none(scenario.num_stas(), served_ue);
  ThroughputReport report = evaluate(scenario, none, w, std::nullopt);
  return {std::move(none), std::move(report)};
}

std::vector<int> sensed_indices(const Scenario& scenario) {
  const std::vector<bool> flags = bs_sensing_flags(scenario);
  std::vector<int> idx;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) idx.push_back(static_cast<int>(i));
  }
  return idx;
}

// Lexicographic order of the x vectors two subset masks expand to, where
// bit p of a mask selects the p-th sensed node (nodes in increasing index).
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const std::uint32_t lowest = diff & (~diff + 1);
  return (b & lowest) != 0;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::NoNull: return "NONULL";
    case Method::Greedy: return "GREEDY";
    case Method::Exhaustive: return "EXHAUSTIVE";
  }
  return "?";
}

Method method_from_string(std::string_view name) {
  if (name == "NONULL") return Method::NoNull;
  if (name == "GREEDY") return Method::Greedy;
  if (name == "EXHAUSTIVE") return Method::Exhaustive;
  throw InvalidArgument("unknown method '" + std::string(name) +
                        "' (expected NONULL, GREEDY or EXHAUSTIVE)");
}

NullingSolution solve_nonull(const Scenario& scenario, Policy policy,
                             int served_ue) {
  Incumbent base = baseline(scenario, policy, served_ue);
  return {std::move(base.decision), std::move(base.report), 0, Method::NoNull};
}

NullingSolution solve_exhaustive(const Scenario& scenario, Policy policy,
                                 int served_ue) {
  const std::vector<int> sensed = sensed_indices(scenario);
  const auto S = static_cast<int>(sensed.size());
  if (S >= 64 || (std::uint64_t{1} << S) > kMaxEnumeratedSubsets) {
    throw InvalidArgument("solve_exhaustive: " + std::to_string(S) +
                          " sensed nodes give more than 2^20 subsets; use GREEDY");
  }
  const int budget = std::min(scenario.params.K - 1, S);

  Incumbent best = baseline(scenario, policy, served_ue);
  const PolicyWeights weights = weights_for(policy);
  const double baseline_wifi = best.report.wifi_mean_throughput;

  std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(budget) + 1);
  const std::uint32_t end = std::uint32_t{1} << S;
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const int size = std::popcount(mask);
    if (size <= budget) by_size[static_cast<std::size_t>(size)].push_back(mask);
  }

  std::int64_t evaluations = 0;
  for (auto& masks : by_size) {
    std::sort(masks.begin(), masks.end(), lex_less);
    for (const std::uint32_t mask : masks) {
      NullingDecision d = NullingDecision::none(scenario.num_stas(), served_ue);
      for (int p = 0; p < S; ++p) {
        if (mask & (std::uint32_t{1} << p)) d.x[static_cast<std::size_t>(sensed[static_cast<std::size_t>(p)])] = true;
      }
      ThroughputReport r = evaluate(scenario, d, weights, baseline_wifi);
      ++evaluations;
      if (r.feasible && r.objective_value > best.report.objective_value) {
        best = {std::move(d), std::move(r)};
      }
    }
  }
  return {std::move(best.decision), std::move(best.report), evaluations,
          Method::Exhaustive};
}

NullingSolution solve_greedy(const Scenario& scenario, Policy policy,
                             int served_ue) {
  const std::vector<int> sensed = sensed_indices(scenario);
  const int budget = scenario.params.K - 1;

  Incumbent best = baseline(scenario, policy, served_ue);
  const PolicyWeights weights = weights_for(policy);
  const double baseline_wifi = best.report.wifi_mean_throughput;

  std::int64_t evaluations = 0;
  while (best.decision.null_count() < budget) {
    const double incumbent = best.report.objective_value;
    const double threshold =
        incumbent + kGreedyImprovementTolerance * std::abs(incumbent);
    std::optional<Incumbent> step;
    for (const int i : sensed) {
      if (best.decision.x[static_cast<std::size_t>(i)]) continue;
      NullingDecision d = best.decision;
      d.x[static_cast<std::size_t>(i)] = true;
      ThroughputReport r = evaluate(scenario, d, weights, baseline_wifi);
      ++evaluations;
      if (!r.feasible || !(r.objective_value > threshold)) continue;
      if (!step || r.objective_value > step->report.objective_value) {
        step = Incumbent{std::move(d), std::move(r)};
      }
    }
    if (!step) break;
    best = std::move(*step);
  }
  return {std::move(best.decision), std::move(best.report), evaluations,
          Method::Greedy};
}

NullingSolution solve(const Scenario& scenario, Policy policy, Method method,
                      int served_ue) {
  switch (method) {
    case Method::NoNull: return solve_nonull(scenario, policy, served_ue);
    case Method::Greedy: return solve_greedy(scenario, policy, served_ue);
    case Method::Exhaustive: return solve_exhaustive(scenario, policy, served_ue);
  }
  throw InvalidArgument("solve: unknown method");
}

}  // namespace coexnull
