#include "citemetric/synth.hpp"

#include <cmath>
#include <cstdio>
#include <thread>

#include "citemetric/error.hpp"
#include "citemetric/random.hpp"

namespace citemetric {

namespace {

// Keeps draws convertible to an integer count.
constexpr double kMaxCount = 0x1.0p53;

std::uint64_t round_count(double x) {
  if (!(x > 0.0)) return 0;
  return static_cast<std::uint64_t>(std::nearbyint(std::min(x, kMaxCount)));
}

void require(bool ok, const char* field, const char* flag, const char* rule) {
  if (!ok) {
    throw Error(ErrorCode::InvalidParams,
                std::string(field) + " (" + flag + ") " + rule);
  }
}

}  // namespace

void SynthParams::validate() const {
  require(journals >= 1, "journals", "--journals", "must be at least 1");
  require(std::isfinite(lognormal_mu), "lognormal_mu", "--mu", "must be finite");
  require(std::isfinite(lognormal_sigma) && lognormal_sigma > 0.0, "lognormal_sigma",
          "--sigma", "must be > 0");
  require(std::isfinite(beta_alpha) && beta_alpha > 0.0, "beta_alpha", "--beta-alpha",
          "must be > 0");
  require(std::isfinite(beta_beta) && beta_beta > 0.0, "beta_beta", "--beta-beta",
          "must be > 0");
  require(mention_ratio >= 0.0 && mention_ratio < 1.0, "mention_ratio", "--mention-ratio",
          "must lie in [0, 1)");
}

SynthParams default_paper_regime() noexcept {
  return SynthParams{10'000, 3.0, 1.8, 9.0, 1.4, 0.8, 42};
}

std::string synth_journal_name(std::uint64_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "journal-%07llu", static_cast<unsigned long long>(index));
  return buf;
}

SynthJournal draw_journal(const SynthParams& params, std::uint64_t index) {
  rng::Xoshiro256ss gen(rng::derive_seed(params.seed, index));
  const std::uint64_t classified =
      round_count(rng::lognormal(gen, params.lognormal_mu, params.lognormal_sigma));
  const double p = rng::beta(gen, params.beta_alpha, params.beta_beta);
  const std::uint64_t supporting = rng::binomial(gen, classified, p);
  const double per_classified = params.mention_ratio / (1.0 - params.mention_ratio);
  const std::uint64_t mentioning =
      round_count(static_cast<double>(classified) * per_classified);
  return SynthJournal{index, JournalKey::normalize(synth_journal_name(index)),
                      JournalTally{supporting, classified - supporting, mentioning}, p};
}

std::vector<SynthJournal> draw_journals(const SynthParams& params, unsigned threads) {
  params.validate();
  const std::uint64_t n = params.journals;
  std::vector<SynthJournal> out;
  out.reserve(n);
  if (threads <= 1 || n < 2) {
    for (std::uint64_t j = 0; j < n; ++j) out.push_back(draw_journal(params, j));
    return out;
  }
  std::vector<std::vector<SynthJournal>> parts(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = n * t / threads;
      const std::uint64_t end = n * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] {
        for (std::uint64_t j = begin; j < end; ++j) parts[t].push_back(draw_journal(params, j));
      });
    }
  }
  for (auto& part : parts) {
    for (auto& sj : part) out.push_back(std::move(sj));
  }
  return out;
}

TallyTable synth_tallies(const SynthParams& params, unsigned threads) {
  TallyTable table;
  for (auto& sj : draw_journals(params, threads)) {
    // A journal with no citations emits no records and never appears in an
    // aggregated corpus.
    if (sj.tally.total() > 0) table.emplace(sj.journal, sj.tally);
  }
  return table;
}

std::vector<CitationRecord> generate_corpus(const SynthParams& params) {
  std::vector<CitationRecord> out;
  generate_corpus(params, [&](CitationRecord&& rec) { out.push_back(std::move(rec)); });
  return out;
}

void write_corpus(std::ostream& out, const SynthParams& params, Format format) {
  if (format == Format::Csv) out << kCsvHeader << '\n';
  std::string line;
  generate_corpus(params, [&](const CitationRecord& rec) {
    line = format == Format::Csv ? to_csv_line(rec) : to_jsonl_line(rec);
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  });
}

}  // namespace citemetric
