#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "coexnull/harness.hpp"

namespace coexnull {

/// Formats with 17 significant digits (round-trips every double).
std::string format_double(double value);

void write_trials_csv(std::ostream& out, const std::vector<TrialResult>& trials);
void write_aggregate_csv(std::ostream& out,
                         const std::vector<AggregateRow>& rows);

nlohmann::json trials_to_json(const std::vector<TrialResult>& trials);
nlohmann::json aggregate_to_json(const std::vector<AggregateRow>& rows);

/// Writes trials.<fmt> and aggregate.<fmt> into `dir`, creating it if
/// needed. format is "csv" or "json". Returns the written paths.
/// Throws Error if the results are empty or a file cannot be written.
std::vector<std::filesystem::path> emit(const SweepResult& results,
                                        const std::filesystem::path& dir,
                                        const std::string& format);

/// CSV with columns N_cs, step, T_on.
void write_csat_csv(std::ostream& out, const RadioParams& params,
                    const std::vector<int>& ncs_values, int steps);

void write_null_depth_csv(std::ostream& out,
                          const std::vector<NullDepthRow>& rows);

}  // namespace coexnull
