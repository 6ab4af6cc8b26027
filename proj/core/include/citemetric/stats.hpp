#pragma once

// Descriptive statistics kernel used by the summary, correlation and
// figure-data reports. All sums are compensated (Neumaier), all results are
// independent of input order up to floating-point rounding.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citemetric/model.hpp"

namespace citemetric::stats {

// Neumaier-compensated sum.
double compensated_sum(std::span<const double> xs) noexcept;

double mean(std::span<const double> xs);            // EmptyInput
double median(std::span<const double> xs);          // EmptyInput
double sample_sd(std::span<const double> xs);       // InsufficientData (n < 2)

// Adjusted Fisher-Pearson G1 = sqrt(n(n-1))/(n-2) * m3 / m2^(3/2), with m2
// and m3 the 1/n central moments. InsufficientData (n < 3), ZeroVariance.
double skewness(std::span<const double> xs);

// Clamped to [-1, 1]. LengthMismatch, InsufficientData (n < 2),
// ZeroVariance if either side is constant.
double pearson(std::span<const double> xs, std::span<const double> ys);

// count/mean/median/sd/min/max always populated; skew absent when n < 3 or
// the column is constant. InsufficientData for n < 2.
StatsSummary summarize(std::span<const double> values, std::string_view label);

// Supporting and disputing columns use every journal; the scite index
// column uses the eligible subset only.
CorrelationReport correlation_report(const std::vector<JournalMetrics>& metrics);

struct HistogramBin {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;

  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

// Equal-width bins, each [lower, upper) except the last, which is closed.
// Edge i is lo + (hi - lo) * i / bins and a value always lands in the bin
// whose reported edges contain it. OutOfRange for values outside [lo, hi]
// (including NaN); InvalidParams for bins == 0 or lo >= hi.
std::vector<HistogramBin> histogram(std::span<const double> values, double lo, double hi,
                                    std::size_t bins);

inline constexpr std::size_t kDefaultSciteBins = 50;

struct ScatterPoint {
  JournalKey journal;
  double log10_total = 0.0;
  double scite_index = 0.0;
};

// One point per eligible journal.
std::vector<ScatterPoint> scatter_points(const std::vector<JournalMetrics>& metrics);

// Column extraction helpers.
std::vector<double> supporting_column(const std::vector<JournalMetrics>& metrics);
std::vector<double> disputing_column(const std::vector<JournalMetrics>& metrics);
std::vector<double> total_column(const std::vector<JournalMetrics>& metrics);
std::vector<double> scite_index_column(const std::vector<JournalMetrics>& metrics);
std::vector<double> eligible_total_column(const std::vector<JournalMetrics>& metrics);

// Shortest round-trip decimal form.
std::string format_double(double v);

std::string summary_json(const StatsSummary& supporting, const StatsSummary& disputing,
                         const StatsSummary& scite_index);
std::string correlation_json(const CorrelationReport& report);
std::string histogram_csv(const std::vector<HistogramBin>& bins);
std::string scatter_csv(const std::vector<ScatterPoint>& points);

}  // namespace citemetric::stats
