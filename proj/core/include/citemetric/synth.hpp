#pragma once

// Seeded synthetic citation corpora.
//
// Journal j (0-based) draws, from its own stream seeded with
// rng::derive_seed(seed, j):
//   c_j ~ round(LogNormal(mu, sigma))             classified citations
//   p_j ~ Beta(alpha, beta)                        support propensity
//   s_j ~ Binomial(c_j, p_j),  d_j = c_j - s_j
//   m_j = round(c_j * mention_ratio / (1 - mention_ratio))
// Because every journal has an independent stream, output does not depend on
// how the index range is split across threads.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "citemetric/aggregate.hpp"
#include "citemetric/ingest.hpp"
#include "citemetric/model.hpp"

namespace citemetric {

struct SynthParams {
  std::uint64_t journals = 10'000;
  double lognormal_mu = 3.0;
  double lognormal_sigma = 1.8;
  double beta_alpha = 9.0;
  double beta_beta = 1.4;
  double mention_ratio = 0.8;
  std::uint64_t seed = 42;

  // Throws Error(InvalidParams) naming the offending field.
  void validate() const;

  friend bool operator==(const SynthParams&, const SynthParams&) = default;
};

// journals=10000, mu=3.0, sigma=1.8, alpha=9.0, beta=1.4, mention_ratio=0.8,
// seed=42. Lands in the same order of magnitude as the published journal
// table; it is not fitted to it.
SynthParams default_paper_regime() noexcept;

std::string synth_journal_name(std::uint64_t index);

struct SynthJournal {
  std::uint64_t index = 0;
  JournalKey journal;
  JournalTally tally;
  double propensity = 0.0;  // p_j, exposed for tests
};

// Draws journal `index` (must be < params.journals). Params are not
// re-validated here.
SynthJournal draw_journal(const SynthParams& params, std::uint64_t index);

// All journals in index order, computed on up to `threads` threads.
std::vector<SynthJournal> draw_journals(const SynthParams& params, unsigned threads = 1);

// Tally table the corpus aggregates to, without materializing records.
TallyTable synth_tallies(const SynthParams& params, unsigned threads = 1);

// Emits each journal's records in index order: supporting, then disputing,
// then mentioning. citing_id is "syn-<journal>-<n>".
template <class Sink>
void generate_corpus(const SynthParams& params, Sink&& sink) {
  params.validate();
  for (std::uint64_t j = 0; j < params.journals; ++j) {
    const SynthJournal sj = draw_journal(params, j);
    const std::string prefix = "syn-" + std::to_string(j) + "-";
    std::uint64_t n = 0;
    auto emit = [&](CitationClass cls, std::uint64_t count) {
      for (std::uint64_t i = 0; i < count; ++i) {
        sink(CitationRecord{prefix + std::to_string(n++), sj.journal, cls});
      }
    };
    emit(CitationClass::Supporting, sj.tally.supporting);
    emit(CitationClass::Disputing, sj.tally.disputing);
    emit(CitationClass::Mentioning, sj.tally.mentioning);
  }
}

std::vector<CitationRecord> generate_corpus(const SynthParams& params);

// Writes the corpus in an ingestible format (CSV includes the header).
void write_corpus(std::ostream& out, const SynthParams& params, Format format);

}  // namespace citemetric
