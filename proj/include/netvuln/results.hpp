#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "netvuln/campaign.hpp"

namespace netvuln {

/// 6 significant digits, "%.6g".
std::string format_number(double value);

/// Fixed 3 decimals. Values that round to zero print as "0.000", never
/// "-0.000".
std::string format_index(double value);

/// network,strategy,trial,alpha,area,index,verdict; one row per
/// (strategy, trial, alpha) in record order.
void write_indexes_csv(const ResultRecord& record, std::ostream& out);

/// removed_edges,r,s for i = 0..E.
void write_curve_csv(const PerformanceCurve& curve, std::ostream& out);

/// Graph metadata, config echo and per-strategy statistics.
std::string summary_json(const ResultRecord& record);

/// Writes <dir>/indexes.csv, <dir>/summary.json and, for trials that kept
/// their curve, <dir>/curves/<strategy>-<trial>.csv. Creates directories
/// as needed; IoError on failure.
void write_results(const ResultRecord& record, const std::filesystem::path& dir);

}  // namespace netvuln
