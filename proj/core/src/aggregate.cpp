#include "citemetric/aggregate.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>
#include <thread>

#include "citemetric/error.hpp"
#include "citemetric/ingest.hpp"

namespace citemetric {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(ErrorCode::ArithmeticOverflow, "tally count overflow");
  }
  return a + b;
}

std::uint64_t parse_count(std::string_view field, std::size_t line, std::string_view column) {
  std::uint64_t value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    throw LineError(ErrorCode::MalformedLine, line,
                    "column '" + std::string(column) + "' is not a non-negative integer: '" +
                        std::string(field) + "'");
  }
  return value;
}

}  // namespace

JournalTally merge_tally(const JournalTally& a, const JournalTally& b) {
  JournalTally out{checked_add(a.supporting, b.supporting),
                   checked_add(a.disputing, b.disputing),
                   checked_add(a.mentioning, b.mentioning)};
  // total() must stay representable too.
  checked_add(checked_add(out.supporting, out.disputing), out.mentioning);
  return out;
}

void add_record(JournalTally& tally, CitationClass cls) {
  switch (cls) {
    case CitationClass::Supporting: tally = merge_tally(tally, {1, 0, 0}); break;
    case CitationClass::Disputing: tally = merge_tally(tally, {0, 1, 0}); break;
    case CitationClass::Mentioning: tally = merge_tally(tally, {0, 0, 1}); break;
  }
}

void add_record(TallyTable& table, const CitationRecord& record) {
  add_record(table[record.journal], record.cls);
}

void merge_into(TallyTable& into, const TallyTable& from) {
  for (const auto& [key, tally] : from) {
    auto& slot = into[key];
    slot = merge_tally(slot, tally);
  }
}

TallyTable merge_tables(TallyTable a, const TallyTable& b) {
  merge_into(a, b);
  return a;
}

TallyTable aggregate_corpus(std::span<const CitationRecord> records, std::size_t shards) {
  if (shards == 0) throw Error(ErrorCode::InvalidParams, "shard count must be at least 1");
  auto fold = [](std::span<const CitationRecord> chunk) {
    TallyTable table;
    for (const auto& rec : chunk) add_record(table, rec);
    return table;
  };
  if (shards == 1 || records.size() < 2) return fold(records);

  const std::size_t n = records.size();
  std::vector<TallyTable> partial(shards);
  std::vector<std::exception_ptr> errors(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) {
      const std::size_t begin = n * s / shards;
      const std::size_t end = n * (s + 1) / shards;
      workers.emplace_back([&, s, begin, end] {
        try {
          partial[s] = fold(records.subspan(begin, end - begin));
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  TallyTable result = std::move(partial[0]);
  for (std::size_t s = 1; s < shards; ++s) merge_into(result, partial[s]);
  return result;
}

std::vector<TallyRow> sorted_rows(const TallyTable& table) {
  std::vector<TallyRow> rows(table.begin(), table.end());
  std::sort(rows.begin(), rows.end(),
            [](const TallyRow& a, const TallyRow& b) { return a.first < b.first; });
  return rows;
}

void write_tally_csv(std::ostream& out, const TallyTable& table) {
  out << kTallyCsvHeader << '\n';
  for (const auto& [key, t] : sorted_rows(table)) {
    out << csv_quote(key.str()) << ',' << t.supporting << ',' << t.disputing << ','
        << t.mentioning << ',' << t.total() << '\n';
  }
}

TallyTable read_tally_csv(std::istream& in) {
  TallyTable table;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header) {
      if (line != kTallyCsvHeader) {
        throw LineError(ErrorCode::MalformedLine, line_no,
                        "expected tally header '" + std::string(kTallyCsvHeader) + "'");
      }
      header = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = split_csv_line(line);
      if (fields.size() != 5) {
        throw Error(ErrorCode::MalformedLine,
                    "expected 5 fields, found " + std::to_string(fields.size()));
      }
      JournalTally t{parse_count(fields[1], line_no, "supporting"),
                     parse_count(fields[2], line_no, "disputing"),
                     parse_count(fields[3], line_no, "mentioning")};
      const auto total = parse_count(fields[4], line_no, "total");
      if (merge_tally(t, {}).total() != total) {
        throw Error(ErrorCode::MalformedLine, "total column does not equal the row sum");
      }
      auto [it, inserted] = table.emplace(JournalKey::normalize(fields[0]), t);
      if (!inserted) {
        throw Error(ErrorCode::MalformedLine, "duplicate journal '" + it->first.str() + "'");
      }
    } catch (const LineError&) {
      throw;
    } catch (const Error& e) {
      throw LineError(e.code(), line_no, e.what());
    }
  }
  if (!header) throw LineError(ErrorCode::MalformedLine, 1, "empty tally file");
  return table;
}

}  // namespace citemetric
