#include "citemetric/report.hpp"

#include <fstream>
#include <sstream>

#include "citemetric/error.hpp"

namespace citemetric {

namespace {

template <class Fn>
auto named(std::string_view what, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(what) + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::filesystem::filesystem_error("cannot open for writing", path,
                                            std::make_error_code(std::errc::io_error));
  }
  out << contents;
  out.flush();
  if (!out) {
    throw std::filesystem::filesystem_error("write failed", path,
                                            std::make_error_code(std::errc::io_error));
  }
}

}  // namespace

Report build_report(const TallyTable& tallies, const ReportOptions& options) {
  Report r;
  r.metrics = build_metrics_table(tallies, options.config);
  const auto si = stats::scite_index_column(r.metrics);
  r.supporting = named("supporting summary", [&] {
    return stats::summarize(stats::supporting_column(r.metrics), "supporting");
  });
  r.disputing = named("disputing summary", [&] {
    return stats::summarize(stats::disputing_column(r.metrics), "disputing");
  });
  r.scite_index = named("scite_index summary", [&] {
    return stats::summarize(si, "scite_index");
  });
  r.correlations = stats::correlation_report(r.metrics);
  r.histogram = named("scite_index histogram", [&] {
    return stats::histogram(si, 0.0, 1.0, options.histogram_bins);
  });
  r.scatter = stats::scatter_points(r.metrics);
  return r;
}

void write_report(const Report& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream metrics;
  write_metrics_csv(metrics, report.metrics);
  write_file(dir / kMetricsFile, metrics.str());
  write_file(dir / kSummaryFile,
             stats::summary_json(report.supporting, report.disputing, report.scite_index));
  write_file(dir / kCorrelationsFile, stats::correlation_json(report.correlations));
  write_file(dir / kHistogramFile, stats::histogram_csv(report.histogram));
  write_file(dir / kScatterFile, stats::scatter_csv(report.scatter));
}

}  // namespace citemetric
