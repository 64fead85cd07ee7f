#pragma once

#include <cstdint>
#include <string_view>

#include "coexnull/coexistence.hpp"
#include "coexnull/rate.hpp"
#include "coexnull/scenario.hpp"

namespace coexnull {

enum class Method { NoNull, Greedy, Exhaustive };

std::string_view to_string(Method method);
Method method_from_string(std::string_view name);

struct NullingSolution {
  NullingDecision decision;
  ThroughputReport report;
  /// Objective evaluations of candidate null groups. The NoNull incumbent
  /// is not counted.
  std::int64_t evaluations = 0;
  Method method = Method::NoNull;
};

/// Largest number of subsets of the sensed set solve_exhaustive will
/// enumerate.
inline constexpr std::uint64_t kMaxEnumeratedSubsets = std::uint64_t{1} << 20;

/// Relative margin a greedy candidate must beat the incumbent by.
inline constexpr double kGreedyImprovementTolerance = 1e-12;

/// The all-zeros decision evaluated under `policy`.
NullingSolution solve_nonull(const Scenario& scenario, Policy policy,
                             int served_ue = 0);

/// Optimal null group by enumeration of every subset of the BS-sensed WiFi
/// nodes (AP included) of size at most K-1. Ties go to the smaller group,
/// then to the lexicographically smallest x.
///
/// Throws InvalidArgument when 2^(sensed nodes) exceeds
/// kMaxEnumeratedSubsets; use solve_greedy instead.
NullingSolution solve_exhaustive(const Scenario& scenario, Policy policy,
                                 int served_ue = 0);

/// Greedy forward selection: starting from NoNull, repeatedly admit the
/// sensed node whose addition raises the objective the most, until the
/// group holds K-1 nodes or no candidate improves it.
NullingSolution solve_greedy(const Scenario& scenario, Policy policy,
                             int served_ue = 0);

NullingSolution solve(const Scenario& scenario, Policy policy, Method method,
                      int served_ue = 0);

}  // namespace coexnull
