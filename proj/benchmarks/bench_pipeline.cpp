#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "citemetric/aggregate.hpp"
#include "citemetric/ingest.hpp"
#include "citemetric/metrics.hpp"
#include "citemetric/synth.hpp"

namespace {

citemetric::SynthParams bench_params(std::uint64_t journals) {
  auto p = citemetric::default_paper_regime();
  p.journals = journals;
  return p;
}

std::string corpus_text(std::uint64_t journals, citemetric::Format format) {
  std::ostringstream out;
  citemetric::write_corpus(out, bench_params(journals), format);
  return out.str();
}

void BM_IngestAggregateJsonl(benchmark::State& state) {
  const std::string text = corpus_text(static_cast<std::uint64_t>(state.range(0)),
                                       citemetric::Format::Jsonl);
  std::uint64_t records = 0;
  for (auto _ : state) {
    std::istringstream in(text);
    citemetric::TallyTable table;
    auto report = citemetric::ingest_stream(
        in, citemetric::Format::Jsonl, citemetric::Policy::Strict,
        [&](const citemetric::CitationRecord& r) { citemetric::add_record(table, r); });
    records = report.accepted;
    benchmark::DoNotOptimize(table);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(records) * state.iterations());
}
BENCHMARK(BM_IngestAggregateJsonl)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_IngestAggregateCsv(benchmark::State& state) {
  const std::string text = corpus_text(static_cast<std::uint64_t>(state.range(0)),
                                       citemetric::Format::Csv);
  std::uint64_t records = 0;
  for (auto _ : state) {
    std::istringstream in(text);
    citemetric::TallyTable table;
    auto report = citemetric::ingest_stream(
        in, citemetric::Format::Csv, citemetric::Policy::Strict,
        [&](const citemetric::CitationRecord& r) { citemetric::add_record(table, r); });
    records = report.accepted;
    benchmark::DoNotOptimize(table);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(records) * state.iterations());
}
BENCHMARK(BM_IngestAggregateCsv)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_AggregateShards(benchmark::State& state) {
  const auto records = citemetric::generate_corpus(bench_params(500));
  const auto shards = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto table = citemetric::aggregate_corpus(records, shards);
    benchmark::DoNotOptimize(table);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(records.size()) * state.iterations());
}
BENCHMARK(BM_AggregateShards)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SynthTallies(benchmark::State& state) {
  const auto params = bench_params(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto table = citemetric::synth_tallies(params);
    benchmark::DoNotOptimize(table);
  }
  state.SetItemsProcessed(state.range(0) * state.iterations());
}
BENCHMARK(BM_SynthTallies)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_BuildMetricsTable(benchmark::State& state) {
  const auto tallies = citemetric::synth_tallies(bench_params(10'000));
  for (auto _ : state) {
    auto metrics = citemetric::build_metrics_table(tallies);
    benchmark::DoNotOptimize(metrics);
  }
}
BENCHMARK(BM_BuildMetricsTable)->Unit(benchmark::kMillisecond);

}  // namespace
