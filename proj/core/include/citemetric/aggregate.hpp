#pragma once

// Per-journal tally tables. (TallyTable, merge_tables, empty table) is a
// commutative monoid, so shards fold independently and merge in any order.

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "citemetric/model.hpp"

namespace citemetric {

using TallyTable = std::unordered_map<JournalKey, JournalTally>;
using TallyRow = std::pair<JournalKey, JournalTally>;

constexpr JournalTally empty_tally() noexcept { return {}; }

// Component-wise sum. Throws Error(ArithmeticOverflow).
JournalTally merge_tally(const JournalTally& a, const JournalTally& b);

// Increments the count matching record.cls. Throws Error(ArithmeticOverflow).
void add_record(TallyTable& table, const CitationRecord& record);
void add_record(JournalTally& tally, CitationClass cls);

void merge_into(TallyTable& into, const TallyTable& from);
TallyTable merge_tables(TallyTable a, const TallyTable& b);

// Splits records into `shards` contiguous chunks, folds each on its own
// thread and merges the partial tables. Equal to the sequential fold for
// every shard count. Throws Error(InvalidParams) if shards == 0.
TallyTable aggregate_corpus(std::span<const CitationRecord> records, std::size_t shards = 1);

// Rows in ascending journal-key byte order.
std::vector<TallyRow> sorted_rows(const TallyTable& table);

inline constexpr std::string_view kTallyCsvHeader = "journal,supporting,disputing,mentioning,total";

void write_tally_csv(std::ostream& out, const TallyTable& table);

// Reads a tally CSV produced by write_tally_csv. Rejects rows whose total
// column disagrees with the row sum and duplicate journals. Throws LineError.
TallyTable read_tally_csv(std::istream& in);

}  // namespace citemetric
