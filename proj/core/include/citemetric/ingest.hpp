#pragma once

// Line-oriented readers for citation-event files.
//
// CSV:   header row `citing_id,journal,class`, RFC-4180 quoting within a line.
// JSONL: one object per line with keys `journal`, `class` and optionally
//        `citing_id`; other keys are ignored.
//
// A UTF-8 byte-order mark on the first line is stripped, a trailing '\r' is
// dropped from every line, and whitespace-only lines are ignored entirely
// (they are neither accepted nor rejected).

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citemetric/error.hpp"
#include "citemetric/model.hpp"

namespace citemetric {

enum class Format { Csv, Jsonl };
enum class Policy { Strict, Skip };

std::optional<Format> parse_format(std::string_view name) noexcept;
std::optional<Policy> parse_policy(std::string_view name) noexcept;
std::string_view to_string(Format f) noexcept;

struct LineIssue {
  std::size_t line = 0;  // 1-based, counting the CSV header
  std::string reason;

  friend bool operator==(const LineIssue&, const LineIssue&) = default;
};

struct IngestReport {
  static constexpr std::size_t kMaxIssues = 20;

  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::vector<LineIssue> first_errors;  // at most kMaxIssues entries

  void record_rejection(std::size_t line, std::string reason);

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

inline constexpr std::string_view kCsvHeader = "citing_id,journal,class";

// Parses one data line. Throws Error with MalformedLine, UnknownClass or
// EmptyKey.
CitationRecord parse_record(std::string_view line, Format format);

// Splits one CSV line into fields. Throws Error(MalformedLine) on a stray or
// unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

// Serializers producing lines parse_record() reads back to an equal record
// (no trailing newline). to_csv_line throws Error(MalformedLine) if
// citing_id contains a line break, which CSV-per-line cannot carry.
std::string to_csv_line(const CitationRecord& record);
std::string to_jsonl_line(const CitationRecord& record);
std::string csv_quote(std::string_view field);
std::string json_quote(std::string_view s);

// Pull-style reader over a line stream. Under Strict the first bad line
// throws a LineError; under Skip bad lines are counted and dropped.
class RecordReader {
 public:
  RecordReader(std::istream& in, Format format, Policy policy);

  std::optional<CitationRecord> next();
  const IngestReport& report() const noexcept { return report_; }

 private:
  bool read_line();
  void reject(ErrorCode code, std::string reason);

  std::istream& in_;
  Format format_;
  Policy policy_;
  IngestReport report_;
  std::string line_;
  std::size_t line_no_ = 0;
  bool header_checked_ = false;
};

template <class Sink>
IngestReport ingest_stream(std::istream& in, Format format, Policy policy, Sink&& sink) {
  RecordReader reader(in, format, policy);
  while (auto rec = reader.next()) sink(std::move(*rec));
  return reader.report();
}

struct IngestResult {
  std::vector<CitationRecord> records;
  IngestReport report;
};

IngestResult ingest_all(std::istream& in, Format format, Policy policy);

}  // namespace citemetric
