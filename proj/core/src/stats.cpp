#include "citemetric/stats.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "citemetric/error.hpp"
#include "citemetric/ingest.hpp"

namespace citemetric::stats {

namespace {

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) noexcept {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const noexcept { return sum + comp; }
};

void require_non_empty(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::EmptyInput, "statistic of an empty sequence");
}

void require_at_least(std::span<const double> xs, std::size_t n, std::string_view what) {
  if (xs.size() < n) {
    throw Error(ErrorCode::InsufficientData,
                std::string(what) + " needs at least " + std::to_string(n) + " values, got " +
                    std::to_string(xs.size()));
  }
}

bool is_constant(std::span<const double> xs) noexcept {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *lo == *hi;
}

// Sums of (x - m)^2 and (x - m)^3.
std::pair<double, double> central_sums(std::span<const double> xs, double m) noexcept {
  Neumaier s2, s3;
  for (const double x : xs) {
    const double d = x - m;
    const double d2 = d * d;
    s2.add(d2);
    s3.add(d2 * d);
  }
  return {s2.value(), s3.value()};
}

std::vector<double> column(const std::vector<JournalMetrics>& metrics, bool eligible_only,
                           double (*get)(const JournalMetrics&)) {
  std::vector<double> out;
  out.reserve(metrics.size());
  for (const auto& m : metrics) {
    if (!eligible_only || m.eligible) out.push_back(get(m));
  }
  return out;
}

}  // namespace

double compensated_sum(std::span<const double> xs) noexcept {
  Neumaier acc;
  for (const double x : xs) acc.add(x);
  return acc.value();
}

double mean(std::span<const double> xs) {
  require_non_empty(xs);
  const double m = compensated_sum(xs) / static_cast<double>(xs.size());
  // Rounding may push the quotient a hair outside the data range (for a
  // constant column in particular); the mean never leaves [min, max].
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return std::clamp(m, *lo, *hi);
}

double median(std::span<const double> xs) {
  require_non_empty(xs);
  std::vector<double> v(xs.begin(), xs.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return lower + (upper - lower) / 2.0;
}

double sample_sd(std::span<const double> xs) {
  require_at_least(xs, 2, "standard deviation");
  if (is_constant(xs)) return 0.0;
  const auto [s2, s3] = central_sums(xs, mean(xs));
  (void)s3;
  return std::sqrt(s2 / static_cast<double>(xs.size() - 1));
}

double skewness(std::span<const double> xs) {
  require_at_least(xs, 3, "skewness");
  if (is_constant(xs)) throw Error(ErrorCode::ZeroVariance, "skewness of a constant sequence");
  const auto n = static_cast<double>(xs.size());
  const auto [s2, s3] = central_sums(xs, mean(xs));
  const double m2 = s2 / n;
  const double m3 = s3 / n;
  // G1^2 = n(n-1) m3^2 / m2^3 under a single square root; this rounds less
  // than composing sqrt(n(n-1)) with m2^(3/2).
  const double g1_sq = n * (n - 1.0) * (m3 * m3) / (m2 * m2 * m2);
  if (std::isfinite(g1_sq) && (g1_sq > 0.0 || m3 == 0.0)) return std::copysign(std::sqrt(g1_sq), m3) / (n - 2.0);
  return std::sqrt(n * (n - 1.0)) / (n - 2.0) * (m3 / (m2 * std::sqrt(m2)));
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "pearson inputs differ in length (" + std::to_string(xs.size()) + " vs " +
                    std::to_string(ys.size()) + ")");
  }
  require_at_least(xs, 2, "pearson correlation");
  if (is_constant(xs) || is_constant(ys)) {
    throw Error(ErrorCode::ZeroVariance, "pearson correlation with a constant input");
  }
  const double mx = mean(xs);
  const double my = mean(ys);
  Neumaier sxy, sxx, syy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  const double vx = sxx.value();
  const double vy = syy.value();
  double denom = std::sqrt(vx * vy);
  if (!std::isfinite(denom) || denom == 0.0) denom = std::sqrt(vx) * std::sqrt(vy);
  return std::clamp(sxy.value() / denom, -1.0, 1.0);
}

StatsSummary summarize(std::span<const double> values, std::string_view label) {
  if (values.size() < 2) {
    throw Error(ErrorCode::InsufficientData,
                "summary of '" + std::string(label) + "' needs at least 2 values, got " +
                    std::to_string(values.size()));
  }
  StatsSummary s;
  s.label = std::string(label);
  s.count = values.size();
  s.mean = mean(values);
  s.median = median(values);
  s.sd = sample_sd(values);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  if (values.size() >= 3 && !is_constant(values)) s.skew = skewness(values);
  return s;
}

std::vector<double> supporting_column(const std::vector<JournalMetrics>& metrics) {
  return column(metrics, false, [](const JournalMetrics& m) {
    return static_cast<double>(m.tally.supporting);
  });
}

std::vector<double> disputing_column(const std::vector<JournalMetrics>& metrics) {
  return column(metrics, false, [](const JournalMetrics& m) {
    return static_cast<double>(m.tally.disputing);
  });
}

std::vector<double> total_column(const std::vector<JournalMetrics>& metrics) {
  return column(metrics, false, [](const JournalMetrics& m) {
    return static_cast<double>(m.tally.total());
  });
}

std::vector<double> scite_index_column(const std::vector<JournalMetrics>& metrics) {
  return column(metrics, true, [](const JournalMetrics& m) { return *m.scite_index; });
}

std::vector<double> eligible_total_column(const std::vector<JournalMetrics>& metrics) {
  return column(metrics, true, [](const JournalMetrics& m) {
    return static_cast<double>(m.tally.total());
  });
}

CorrelationReport correlation_report(const std::vector<JournalMetrics>& metrics) {
  auto named = [](std::string_view what, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      throw Error(e.code(), std::string(what) + ": " + e.what());
    }
  };
  const auto totals = total_column(metrics);
  CorrelationReport r;
  r.r_supporting_vs_total = named("r_supporting_vs_total", [&] {
    return pearson(supporting_column(metrics), totals);
  });
  r.r_disputing_vs_total = named("r_disputing_vs_total", [&] {
    return pearson(disputing_column(metrics), totals);
  });
  r.r_si_vs_total = named("r_si_vs_total", [&] {
    return pearson(scite_index_column(metrics), eligible_total_column(metrics));
  });
  return r;
}

std::vector<HistogramBin> histogram(std::span<const double> values, double lo, double hi,
                                    std::size_t bins) {
  if (bins == 0) throw Error(ErrorCode::InvalidParams, "histogram needs at least one bin");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidParams, "histogram range must satisfy lo < hi");

  const double width = hi - lo;
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i < bins; ++i) {
    edges[i] = lo + width * static_cast<double>(i) / static_cast<double>(bins);
  }
  edges[bins] = hi;

  std::vector<HistogramBin> out(bins);
  for (std::size_t i = 0; i < bins; ++i) out[i] = {edges[i], edges[i + 1], 0};

  for (const double v : values) {
    if (!(v >= lo && v <= hi)) {
      throw Error(ErrorCode::OutOfRange, "histogram value " + format_double(v) +
                                             " outside [" + format_double(lo) + ", " +
                                             format_double(hi) + "]");
    }
    const double pos = (v - lo) / width * static_cast<double>(bins);
    auto idx = std::min(static_cast<std::size_t>(pos), bins - 1);
    // Snap to the bin whose reported edges actually contain v.
    while (idx > 0 && v < edges[idx]) --idx;
    while (idx + 1 < bins && v >= edges[idx + 1]) ++idx;
    ++out[idx].count;
  }
  return out;
}

std::vector<ScatterPoint> scatter_points(const std::vector<JournalMetrics>& metrics) {
  std::vector<ScatterPoint> out;
  for (const auto& m : metrics) {
    if (!m.eligible) continue;
    out.push_back({m.journal, std::log10(static_cast<double>(m.tally.total())), *m.scite_index});
  }
  return out;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

namespace {

nlohmann::ordered_json summary_object(const StatsSummary& s) {
  nlohmann::ordered_json j;
  j["count"] = s.count;
  j["mean"] = s.mean;
  j["median"] = s.median;
  j["sd"] = s.sd;
  j["skew"] = s.skew ? nlohmann::ordered_json(*s.skew) : nlohmann::ordered_json(nullptr);
  j["min"] = s.min;
  j["max"] = s.max;
  return j;
}

}  // namespace

std::string summary_json(const StatsSummary& supporting, const StatsSummary& disputing,
                         const StatsSummary& scite_index) {
  nlohmann::ordered_json j;
  j["supporting"] = summary_object(supporting);
  j["disputing"] = summary_object(disputing);
  j["scite_index"] = summary_object(scite_index);
  return j.dump(2) + "\n";
}

std::string correlation_json(const CorrelationReport& report) {
  nlohmann::ordered_json j;
  j["r_supporting_vs_total"] = report.r_supporting_vs_total;
  j["r_disputing_vs_total"] = report.r_disputing_vs_total;
  j["r_si_vs_total"] = report.r_si_vs_total;
  return j.dump(2) + "\n";
}

std::string histogram_csv(const std::vector<HistogramBin>& bins) {
  std::ostringstream out;
  out << "bin_lower,bin_upper,count\n";
  for (const auto& b : bins) {
    out << format_double(b.lower) << ',' << format_double(b.upper) << ',' << b.count << '\n';
  }
  return out.str();
}

std::string scatter_csv(const std::vector<ScatterPoint>& points) {
  std::ostringstream out;
  out << "journal,log10_total,scite_index\n";
  for (const auto& p : points) {
    out << csv_quote(p.journal.str()) << ',' << format_double(p.log10_total) << ',' << format_double(p.scite_index)
        << '\n';
  }
  return out.str();
}

}  // namespace citemetric::stats
