#pragma once

// Scite index and the eligibility filter applied before it is reported.

#include <ostream>
#include <string>
#include <vector>

#include "citemetric/aggregate.hpp"
#include "citemetric/model.hpp"

namespace citemetric {

// supporting / (supporting + disputing). Mentions play no part.
// Throws Error(UndefinedIndex) when both counts are zero.
double scite_index(const JournalTally& tally);

// Eligible iff total() > min_total_citations and classified() >=
// min_classified. The index is only computed for eligible journals.
bool is_eligible(const JournalTally& tally, const MetricsConfig& config) noexcept;

JournalMetrics evaluate_journal(const JournalKey& journal, const JournalTally& tally,
                                const MetricsConfig& config);

// One entry per journal, sorted by key. Throws Error(InvalidConfig).
std::vector<JournalMetrics> build_metrics_table(const TallyTable& tallies,
                                                const MetricsConfig& config = {});

std::size_t eligible_count(const std::vector<JournalMetrics>& table) noexcept;

inline constexpr std::string_view kMetricsCsvHeader =
    "journal,supporting,disputing,mentioning,total,classified,eligible,scite_index";

// scite_index is written with 4 decimals and left empty for ineligible rows.
void write_metrics_csv(std::ostream& out, const std::vector<JournalMetrics>& table);

std::string format_fixed(double value, int decimals);

}  // namespace citemetric
