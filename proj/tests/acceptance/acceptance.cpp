// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "citemetric/aggregate.hpp"
#include "citemetric/error.hpp"
#include "citemetric/ingest.hpp"
#include "citemetric/metrics.hpp"
#include "citemetric/report.hpp"
#include "citemetric/stats.hpp"
#include "citemetric/synth.hpp"
#include "commands.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace citemetric;
namespace st = citemetric::stats;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

JournalKey key(const std::string& s) { return JournalKey::normalize(s); }

// ---------------------------------------------------------------------------

Outcome si_formula_exactness() {
  Outcome o;
  std::mt19937_64 gen(101);
  std::size_t undefined = 0;
  for (int i = 0; i < 10'000; ++i) {
    auto draw = [&]() -> std::uint64_t {
      switch (gen() % 4) {
        case 0: return 0;
        case 1: return gen() % 10;
        case 2: return gen() % 1'000'000;
        default: return gen() >> 24;
      }
    };
    const JournalTally t{draw(), draw(), draw()};
    const std::uint64_t denom = t.supporting + t.disputing;
    bool threw = false;
    double si = 0.0;
    try {
      si = scite_index(t);
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::UndefinedIndex;
      if (!threw) o.require(false, "unexpected error code");
    }
    if (denom == 0) {
      ++undefined;
      o.require(threw, "UndefinedIndex not raised for zero denominator");
    } else {
      o.require(!threw, "UndefinedIndex raised for positive denominator");
      const double direct = static_cast<double>(t.supporting) / static_cast<double>(denom);
      o.require(std::memcmp(&si, &direct, sizeof si) == 0, "SI not bit-identical");
    }
  }
  if (o.pass) o.detail = fmt("10000 tallies bit-identical, %zu undefined", undefined);
  return o;
}

Outcome eligibility_semantics() {
  Outcome o;
  const MetricsConfig cfg;
  o.require(!evaluate_journal(key("a"), {50, 0, 50}, cfg).eligible, "total=100 eligible");
  o.require(evaluate_journal(key("a"), {1, 0, 100}, cfg).eligible,
            "total=101, classified=1 not eligible");
  o.require(!evaluate_journal(key("a"), {0, 0, 101}, cfg).eligible,
            "total=101, classified=0 eligible");

  std::mt19937_64 gen(202);
  std::size_t checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    TallyTable t;
    for (int j = 0; j < 500; ++j) {
      t[key("j" + std::to_string(j))] = {gen() % 60, gen() % 4 == 0 ? 0 : gen() % 6, gen() % 70};
    }
    std::ostringstream csv;
    write_tally_csv(csv, t);
    const MetricsConfig c{gen() % 150, 1 + gen() % 5};
    const auto table = build_metrics_table(t, c);
    o.require(table.size() == 500, "metrics table lost journals");
    o.require(eligible_count(table) == oracle::eligible_in_tally_csv(csv.str(), c.min_total_citations,
                                                                      c.min_classified),
              "eligible count differs from brute-force recount");
    for (const auto& m : table) o.require(m.eligible == m.scite_index.has_value(), "SI presence");
    ++checked;
  }
  if (o.pass) o.detail = fmt("boundaries ok, %zu random 500-journal tables match recount", checked);
  return o;
}

Outcome statistics_oracles() {
  Outcome o;
  std::mt19937_64 gen(303);
  std::uniform_real_distribution<double> expo(-3.0, 6.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + gen() % 499;
    std::vector<double> xs(n), ys(n);
    for (auto& x : xs) x = std::pow(10.0, expo(gen));
    for (auto& y : ys) y = std::pow(10.0, expo(gen));
    auto check = [&](double got, long double want, const char* what) {
      const double err = std::fabs(got - static_cast<double>(want));
      worst = std::max(worst, err);
      o.require(err <= 1e-9, fmt("%s off by %g (n=%zu)", what, err, n));
    };
    check(st::mean(xs), oracle::mean(xs), "mean");
    check(st::median(xs), oracle::median(xs), "median");
    check(st::sample_sd(xs), oracle::sample_sd(xs), "sd");
    check(st::pearson(xs, ys), oracle::pearson(xs, ys), "pearson");
    if (n >= 3) check(st::skewness(xs), oracle::skewness_g1(xs), "skewness");
  }
  const double g1 = st::skewness(std::vector<double>{1, 1, 1, 10});
  o.require(g1 == 2.0, fmt("skewness([1,1,1,10]) = %.17g", g1));
  const double r = st::pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 4});
  o.require(std::fabs(r - 9.0 / std::sqrt(84.0)) <= 1e-12, "pearson([1,2,3],[1,2,4])");
  if (o.pass) o.detail = fmt("1000 vectors, worst abs error %.3g; G1 = 2 exactly", worst);
  return o;
}

Outcome monoid_shard_invariance() {
  Outcome o;
  std::mt19937_64 gen(404);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = gen() % 400;
    const std::size_t journals = 1 + gen() % 40;
    std::vector<CitationRecord> recs;
    recs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      recs.push_back({"", key("journal " + std::to_string(gen() % journals)),
                      static_cast<CitationClass>(gen() % 3)});
    }
    const auto expected = oracle::fold(recs);
    for (std::size_t shards = 1; shards <= 8; ++shards) {
      std::map<std::string, oracle::Triple> got;
      for (const auto& [k, t] : aggregate_corpus(recs, shards)) {
        got[k.str()] = {t.supporting, t.disputing, t.mentioning};
      }
      o.require(got == expected, fmt("corpus %d, %zu shards differs from sequential fold", c, shards));
    }
  }
  auto table = [&] {
    TallyTable t;
    const auto n = gen() % 10;
    for (std::size_t i = 0; i < n; ++i) {
      t[key("k" + std::to_string(gen() % 12))] = {gen() % 100, gen() % 100, gen() % 100};
    }
    return t;
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = table(), b = table(), c = table();
    o.require(merge_tables(a, b) == merge_tables(b, a), "merge not commutative");
    o.require(merge_tables(merge_tables(a, b), c) == merge_tables(a, merge_tables(b, c)),
              "merge not associative");
    o.require(merge_tables(a, {}) == a, "empty table not identity");
  }
  if (o.pass) o.detail = "200 corpora x 8 shard counts exact; 1000 monoid-law triples";
  return o;
}

Outcome si_monotonicity() {
  Outcome o;
  std::mt19937_64 gen(505);
  for (int i = 0; i < 10'000; ++i) {
    const JournalTally t{gen() % 5000, gen() % 5000, gen() % 5000};
    if (t.classified() == 0) continue;
    const double si = scite_index(t);
    o.require(scite_index({t.supporting + 1, t.disputing, t.mentioning}) >= si,
              "+1 support decreased SI");
    o.require(scite_index({t.supporting, t.disputing + 1, t.mentioning}) <= si,
              "+1 dispute increased SI");
    o.require(scite_index({t.supporting, t.disputing, gen()}) == si, "mentions changed SI");
  }
  if (o.pass) o.detail = "10000 tallies";
  return o;
}

struct PaperCorpus {
  Report report;
  std::uint64_t records = 0;
  bool matches_draws = false;
  double seconds = 0.0;
};

const PaperCorpus& paper_corpus() {
  static const PaperCorpus corpus = [] {
    PaperCorpus c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto params = default_paper_regime();
    TallyTable tallies;
    generate_corpus(params, [&](const CitationRecord& rec) {
      add_record(tallies, rec);
      ++c.records;
    });
    c.matches_draws = tallies == synth_tallies(params);
    c.report = build_report(tallies);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
  }();
  return corpus;
}

Outcome correlation_pattern() {
  Outcome o;
  const auto& c = paper_corpus();
  const auto& r = c.report.correlations;
  o.require(c.matches_draws, "aggregated corpus differs from the drawn tallies");
  o.require(r.r_supporting_vs_total >= 0.90,
            fmt("r_supporting_vs_total = %.4f < 0.90", r.r_supporting_vs_total));
  o.require(std::fabs(r.r_si_vs_total) <= 0.15,
            fmt("|r_si_vs_total| = %.4f > 0.15", std::fabs(r.r_si_vs_total)));
  o.detail = fmt("%llu records; r_sup=%.4f r_dis=%.4f r_si=%.4f%s",
                 static_cast<unsigned long long>(c.records), r.r_supporting_vs_total,
                 r.r_disputing_vs_total, r.r_si_vs_total, o.pass ? "" : (" -- " + o.detail).c_str());
  return o;
}

Outcome skew_histogram_pattern() {
  Outcome o;
  const auto& rep = paper_corpus().report;
  const double sup_skew = rep.supporting.skew.value_or(NAN);
  const double si_skew = rep.scite_index.skew.value_or(NAN);
  const auto& h = rep.histogram;
  std::size_t mode = 0, total = 0, upper_mass = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].count > h[mode].count) mode = i;
    total += h[i].count;
    if (h[i].lower >= 0.8 - 1e-12) upper_mass += h[i].count;
  }
  const double mode_mid = (h[mode].lower + h[mode].upper) / 2.0;
  const double share = static_cast<double>(upper_mass) / static_cast<double>(total);

  std::string failures;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) {
      o.pass = false;
      failures += (failures.empty() ? "" : "; ") + what;
    }
  };
  require(sup_skew > 2.0, fmt("supporting skew %.4f <= 2", sup_skew));
  require(si_skew < 0.0, fmt("SI skew %.4f >= 0", si_skew));
  require(share >= 0.5, fmt("SI mass in [0.8, 1] = %.3f < 0.5", share));
  require(mode_mid >= 0.8 && mode_mid <= 0.95,
          fmt("SI histogram mode bin [%.2f, %.2f] (midpoint %.2f) outside [0.8, 0.95]",
              h[mode].lower, h[mode].upper, mode_mid));
  o.detail = fmt("skew_sup=%.4f skew_si=%.4f mass[0.8,1]=%.3f mode=[%.2f,%.2f]", sup_skew,
                 si_skew, share, h[mode].lower, h[mode].upper);
  if (!o.pass) o.detail += " -- " + failures;
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism_round_trip() {
  Outcome o;
  const fs::path root =
      fs::temp_directory_path() / ("citemetric-acceptance-" + std::to_string(std::random_device{}()));
  fs::create_directories(root);
  auto cli = [&](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    o.require(code == 0, "command failed: " + args.front() + ": " + err.str());
  };
  const char* files[] = {kMetricsFile, kSummaryFile, kCorrelationsFile, kHistogramFile, kScatterFile};
  for (const char* run : {"a", "b"}) {
    const fs::path d = root / run;
    cli({"synth", "--preset", "paper", "--journals", "2000", "--seed", "42", "-o",
         (d / "corpus.jsonl").string()});
    cli({"aggregate", (d / "corpus.jsonl").string(), "-o", (d / "tallies.csv").string()});
    cli({"report", (d / "tallies.csv").string(), "-o", (d / "report").string()});
  }
  o.require(slurp(root / "a/corpus.jsonl") == slurp(root / "b/corpus.jsonl"), "corpus differs");
  o.require(slurp(root / "a/tallies.csv") == slurp(root / "b/tallies.csv"), "tallies differ");
  for (const char* f : files) {
    o.require(slurp(root / "a/report" / f) == slurp(root / "b/report" / f),
              std::string("report file differs: ") + f);
  }

  std::ifstream tally_in(root / "a/tallies.csv");
  const auto tallies = read_tally_csv(tally_in);
  std::ostringstream rewritten;
  write_tally_csv(rewritten, tallies);
  o.require(rewritten.str() == slurp(root / "a/tallies.csv"), "tally CSV rewrite differs");
  std::istringstream reread(rewritten.str());
  o.require(build_metrics_table(read_tally_csv(reread)) == build_metrics_table(tallies),
            "metrics table differs after round trip");

  std::error_code ec;
  fs::remove_all(root, ec);
  if (o.pass) o.detail = "synth -> aggregate -> report byte-identical twice; tally CSV round trip exact";
  return o;
}

Outcome throughput() {
  Outcome o;
  constexpr std::uint64_t kRecords = 1'000'000;
  SynthParams params = default_paper_regime();
  params.journals = 20'000;
  std::string text;
  text.reserve(kRecords * 80);
  std::uint64_t produced = 0;
  generate_corpus(params, [&](const CitationRecord& rec) {
    if (produced >= kRecords) return;
    text += to_jsonl_line(rec);
    text.push_back('\n');
    ++produced;
  });
  o.require(produced == kRecords, "corpus too small");

  const auto t0 = std::chrono::steady_clock::now();
  std::istringstream in(std::move(text));
  TallyTable table;
  const auto report = ingest_stream(in, Format::Jsonl, Policy::Strict,
                                    [&](const CitationRecord& rec) { add_record(table, rec); });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(report.accepted == kRecords, "not all records accepted");
  o.require(secs < 10.0, fmt("took %.2f s", secs));
  o.detail = fmt("%llu JSONL records ingested + aggregated in %.2f s (%.0f rec/s), %zu journals",
                 static_cast<unsigned long long>(report.accepted), secs,
                 static_cast<double>(report.accepted) / secs, table.size());
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // <= 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "SI formula exactness", 1.0, si_formula_exactness},
      {2, "eligibility semantics", 0.0, eligibility_semantics},
      {3, "statistics oracle suite", 10.0, statistics_oracles},
      {4, "monoid / shard invariance", 10.0, monoid_shard_invariance},
      {5, "SI monotonicity and mention invariance", 0.0, si_monotonicity},
      {6, "correlation pattern on paper preset", 30.0, correlation_pattern},
      {7, "skew and SI histogram pattern on paper preset", 30.0,
       skew_histogram_pattern},
      {8, "determinism and round trip", 0.0, determinism_round_trip},
      {9, "throughput: 1M JSONL records", 10.0, throughput},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // Criteria 6 and 7 share one corpus; charge its construction to each.
    if (c.id == 7) secs += paper_corpus().seconds;
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail += fmt(" -- over time budget (%.2f s >= %.0f s)", secs, c.budget_seconds);
    }
    std::printf("[%s] AC%d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
