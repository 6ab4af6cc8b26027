#pragma once

// Tally table -> every report artifact, computed in memory before anything
// is written so a failing statistic leaves no partial output.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "citemetric/aggregate.hpp"
#include "citemetric/metrics.hpp"
#include "citemetric/stats.hpp"

namespace citemetric {

struct ReportOptions {
  MetricsConfig config;
  std::size_t histogram_bins = stats::kDefaultSciteBins;
};

struct Report {
  std::vector<JournalMetrics> metrics;
  StatsSummary supporting;   // all journals
  StatsSummary disputing;    // all journals
  StatsSummary scite_index;  // eligible journals only
  CorrelationReport correlations;
  std::vector<stats::HistogramBin> histogram;  // scite index over [0, 1]
  std::vector<stats::ScatterPoint> scatter;
};

// Throws Error (InsufficientData, ZeroVariance, ...) with a message naming
// the statistic that could not be computed.
Report build_report(const TallyTable& tallies, const ReportOptions& options = {});

inline constexpr const char* kMetricsFile = "metrics.csv";
inline constexpr const char* kSummaryFile = "summary.json";
inline constexpr const char* kCorrelationsFile = "correlations.json";
inline constexpr const char* kHistogramFile = "histogram.csv";
inline constexpr const char* kScatterFile = "scatter.csv";

// Writes the five artifacts into `dir` (created if missing). Throws
// std::filesystem::filesystem_error or std::ios_base::failure on I/O errors.
void write_report(const Report& report, const std::filesystem::path& dir);

}  // namespace citemetric
