#include "citemetric/metrics.hpp"

#include <array>
#include <charconv>

#include "citemetric/error.hpp"
#include "citemetric/ingest.hpp"

namespace citemetric {

double scite_index(const JournalTally& tally) {
  const std::uint64_t classified = tally.classified();
  if (classified == 0) {
    throw Error(ErrorCode::UndefinedIndex,
                "scite index is undefined without supporting or disputing citations");
  }
  return static_cast<double>(tally.supporting) / static_cast<double>(classified);
}

bool is_eligible(const JournalTally& tally, const MetricsConfig& config) noexcept {
  return tally.total() > config.min_total_citations &&
         tally.classified() >= config.min_classified;
}

JournalMetrics evaluate_journal(const JournalKey& journal, const JournalTally& tally,
                                const MetricsConfig& config) {
  JournalMetrics m{journal, tally, std::nullopt, is_eligible(tally, config)};
  if (m.eligible) m.scite_index = scite_index(tally);
  return m;
}

std::vector<JournalMetrics> build_metrics_table(const TallyTable& tallies,
                                                const MetricsConfig& config) {
  config.validate();
  std::vector<JournalMetrics> out;
  out.reserve(tallies.size());
  for (const auto& [key, tally] : sorted_rows(tallies)) {
    out.push_back(evaluate_journal(key, tally, config));
  }
  return out;
}

std::size_t eligible_count(const std::vector<JournalMetrics>& table) noexcept {
  std::size_t n = 0;
  for (const auto& m : table) n += m.eligible ? 1 : 0;
  return n;
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

void write_metrics_csv(std::ostream& out, const std::vector<JournalMetrics>& table) {
  out << kMetricsCsvHeader << '\n';
  for (const auto& m : table) {
    const auto& t = m.tally;
    out << csv_quote(m.journal.str()) << ',' << t.supporting << ',' << t.disputing << ','
        << t.mentioning << ',' << t.total() << ',' << t.classified() << ','
        << (m.eligible ? "true" : "false") << ',';
    if (m.scite_index) out << format_fixed(*m.scite_index, 4);
    out << '\n';
  }
}

}  // namespace citemetric
