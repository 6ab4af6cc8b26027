#include <doctest.h>

#include <cmath>
#include <sstream>

#include "citemetric/aggregate.hpp"
#include "citemetric/error.hpp"
#include "citemetric/report.hpp"
#include "citemetric/synth.hpp"

using namespace citemetric;

TEST_CASE("paper regime defaults") {
  const auto p = default_paper_regime();
  CHECK(p.journals == 10'000);
  CHECK(p.lognormal_mu == 3.0);
  CHECK(p.lognormal_sigma == 1.8);
  CHECK(p.beta_alpha == 9.0);
  CHECK(p.beta_beta == 1.4);
  CHECK(p.mention_ratio == 0.8);
  CHECK(p.seed == 42);
  CHECK(p == SynthParams{});
}

TEST_CASE("invalid parameters name the field") {
  auto message = [](SynthParams p) -> std::string {
    try {
      p.validate();
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParams);
      return e.what();
    }
    return "";
  };
  SynthParams p;
  p.journals = 0;
  CHECK(message(p).find("--journals") != std::string::npos);
  p = {};
  p.lognormal_sigma = 0.0;
  CHECK(message(p).find("--sigma") != std::string::npos);
  p = {};
  p.beta_alpha = 0.0;
  CHECK(message(p).find("--beta-alpha") != std::string::npos);
  p = {};
  p.beta_beta = -1.0;
  CHECK(message(p).find("--beta-beta") != std::string::npos);
  p = {};
  p.mention_ratio = 1.0;
  CHECK(message(p).find("--mention-ratio") != std::string::npos);
  p = {};
  p.lognormal_mu = NAN;
  CHECK(message(p).find("--mu") != std::string::npos);
  CHECK(message(SynthParams{}).empty());
}

TEST_CASE("single journal conserves its classified total") {
  SynthParams p;
  p.journals = 1;
  p.lognormal_mu = std::log(250.0);
  p.lognormal_sigma = 1e-9;
  p.beta_alpha = p.beta_beta = 1.0;
  p.seed = 5;
  const auto sj = draw_journal(p, 0);
  CHECK(sj.tally.classified() == 250);
  CHECK(sj.tally.mentioning == 1000);
  CHECK(sj.journal.str() == "journal-0000000");

  const auto table = aggregate_corpus(generate_corpus(p));
  REQUIRE(table.size() == 1);
  CHECK(table.begin()->second == sj.tally);
}

TEST_CASE("generation is deterministic and thread-count independent") {
  SynthParams p;
  p.journals = 300;
  p.seed = 7;
  std::ostringstream a, b;
  write_corpus(a, p, Format::Jsonl);
  write_corpus(b, p, Format::Jsonl);
  CHECK(a.str() == b.str());
  CHECK(!a.str().empty());

  const auto one = draw_journals(p, 1);
  const auto four = draw_journals(p, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].journal == four[i].journal);
    CHECK(one[i].tally == four[i].tally);
  }

  p.seed = 8;
  std::ostringstream c;
  write_corpus(c, p, Format::Jsonl);
  CHECK(c.str() != a.str());
}

TEST_CASE("record stream aggregates to the drawn tallies") {
  SynthParams p;
  p.journals = 400;
  p.seed = 11;
  const auto records = generate_corpus(p);
  CHECK(aggregate_corpus(records, 3) == synth_tallies(p, 2));

  std::ostringstream csv;
  write_corpus(csv, p, Format::Csv);
  std::istringstream in(csv.str());
  const auto parsed = ingest_all(in, Format::Csv, Policy::Strict);
  CHECK(parsed.records == records);
}

TEST_CASE("mentions are a deterministic function of the classified total") {
  SynthParams p;
  p.journals = 500;
  p.mention_ratio = 0.3;
  for (const auto& sj : draw_journals(p)) {
    const double c = static_cast<double>(sj.tally.classified());
    CHECK(sj.tally.mentioning == static_cast<std::uint64_t>(std::nearbyint(c * 0.3 / 0.7)));
    CHECK(sj.propensity >= 0.0);
    CHECK(sj.propensity <= 1.0);
  }
  p.mention_ratio = 0.0;
  for (const auto& sj : draw_journals(p)) CHECK(sj.tally.mentioning == 0);
}

TEST_CASE("SI sample mean follows the Beta mean") {
  SynthParams p{10'000, 3.0, 1.5, 9.0, 1.4, 0.8, 42};
  const auto report = build_report(synth_tallies(p));
  CHECK(std::fabs(report.scite_index.mean - 9.0 / 10.4) <= 0.05);

  SynthParams sym{12'000, 3.0, 1.5, 4.0, 4.0, 0.8, 3};
  const auto r2 = build_report(synth_tallies(sym));
  REQUIRE(r2.scite_index.count >= 5000);
  CHECK(std::fabs(r2.scite_index.mean - 0.5) <= 0.02);
}

// Golden values from the first run of the paper preset (seed 42).
TEST_CASE("paper preset golden statistics") {
  const auto r = build_report(synth_tallies(default_paper_regime()));
  CHECK(r.metrics.size() == 9817);
  CHECK(r.scite_index.count == 5011);
  REQUIRE(r.supporting.skew);
  REQUIRE(r.scite_index.skew);
  CHECK(*r.supporting.skew == doctest::Approx(20.18247704).epsilon(1e-8));
  CHECK(*r.scite_index.skew == doctest::Approx(-1.191644238).epsilon(1e-8));
  CHECK(r.correlations.r_supporting_vs_total == doctest::Approx(0.989068).epsilon(1e-5));
  CHECK(r.correlations.r_si_vs_total == doctest::Approx(0.007232).epsilon(1e-3));
}
