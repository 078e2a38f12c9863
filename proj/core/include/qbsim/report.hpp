// report.hpp — CSV datasets and the JSON metadata sidecar written per run.
// Values are printed with 17 significant digits so a reread reproduces the
// in-memory table exactly.

#pragma once

#include "qbsim/config.hpp"
#include "qbsim/experiments.hpp"
#include "qbsim/metrics.hpp"

#include <string>
#include <vector>

namespace qb::report {

inline constexpr const char* kSeriesHeader =
    "t,energy,ergotropy,power,gamma,purity,entropy,mutual_info,consonance,"
    "charger_entropy";

void write_series_csv(const std::string& path,
                      const std::vector<metrics::MetricsRecord>& records);
std::vector<metrics::MetricsRecord> read_series_csv(const std::string& path);

void write_sweep_csv(const std::string& path, const experiments::SweepResult& result);
void write_scaling_csv(const std::string& path,
                       const std::vector<experiments::ScalingRow>& rows);

// Everything needed to re-run: resolved parameters, cutoffs, truncation
// deficit, grid, normalization flag, and the tool version. The time axis note
// records that the grid span is a reproduction choice.
struct RunMetadata {
    config::RunConfig run;
    std::vector<int> resolved_cutoffs;
    double truncation_deficit = 0.0;
    std::string command;
};
void write_metadata(const std::string& path, const RunMetadata& meta);

} // namespace qb::report
