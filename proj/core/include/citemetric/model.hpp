#pragma once

// Domain types shared by the ingest, aggregate, metrics and stats modules.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace citemetric {

enum class CitationClass : std::uint8_t { Supporting, Disputing, Mentioning };

std::string_view to_string(CitationClass c) noexcept;

// Case-insensitive match against exactly "supporting", "disputing",
// "mentioning". Returns nullopt for anything else.
std::optional<CitationClass> parse_citation_class(std::string_view label) noexcept;

// Normalized journal identifier. The only way to obtain one is through
// normalize(), so every JournalKey in the program is non-empty and canonical.
class JournalKey {
 public:
  // Trims, collapses internal whitespace runs to one space and ASCII
  // case-folds. Inputs shaped like an ISSN (NNNN-NNNC, C a digit or X) are
  // kept verbatim after uppercasing. Throws Error(EmptyKey).
  static JournalKey normalize(std::string_view raw);

  const std::string& str() const noexcept { return key_; }

  friend bool operator==(const JournalKey&, const JournalKey&) = default;
  friend auto operator<=>(const JournalKey&, const JournalKey&) = default;

 private:
  explicit JournalKey(std::string key) : key_(std::move(key)) {}
  std::string key_;
};

inline JournalKey normalize_journal_key(std::string_view raw) {
  return JournalKey::normalize(raw);
}

bool is_issn_form(std::string_view s) noexcept;

struct CitationRecord {
  std::string citing_id;  // provenance only, never read by any metric
  JournalKey journal;
  CitationClass cls;

  friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

struct JournalTally {
  std::uint64_t supporting = 0;
  std::uint64_t disputing = 0;
  std::uint64_t mentioning = 0;

  constexpr std::uint64_t total() const noexcept {
    return supporting + disputing + mentioning;
  }
  constexpr std::uint64_t classified() const noexcept {
    return supporting + disputing;
  }

  friend bool operator==(const JournalTally&, const JournalTally&) = default;
};

struct MetricsConfig {
  std::uint64_t min_total_citations = 100;  // exclusive: total must exceed it
  std::uint64_t min_classified = 1;         // inclusive

  // Throws Error(InvalidConfig) when min_classified is 0.
  void validate() const;
};

struct JournalMetrics {
  JournalKey journal;
  JournalTally tally;
  std::optional<double> scite_index;  // engaged iff eligible
  bool eligible = false;

  friend bool operator==(const JournalMetrics&, const JournalMetrics&) = default;
};

struct StatsSummary {
  std::string label;
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double sd = 0.0;
  std::optional<double> skew;  // absent for n < 3 or zero variance
  double min = 0.0;
  double max = 0.0;
};

struct CorrelationReport {
  double r_supporting_vs_total = 0.0;
  double r_disputing_vs_total = 0.0;
  double r_si_vs_total = 0.0;
};

}  // namespace citemetric

template <>
struct std::hash<citemetric::JournalKey> {
  std::size_t operator()(const citemetric::JournalKey& k) const noexcept {
    return std::hash<std::string>{}(k.str());
  }
};
