#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

#include "citemetric/aggregate.hpp"
#include "citemetric/error.hpp"
#include "citemetric/ingest.hpp"
#include "citemetric/report.hpp"
#include "citemetric/synth.hpp"

namespace citemetric::cli {

namespace fs = std::filesystem;

namespace {

// Raised for missing/unwritable files; maps to kIoError.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams:
    case ErrorCode::InvalidConfig:
      return kUsageError;
    default:
      return kDataError;
  }
}

std::optional<Format> format_from_extension(const std::string& path) {
  const auto ext = fs::path(path).extension().string();
  if (ext == ".csv") return Format::Csv;
  if (ext == ".jsonl" || ext == ".ndjson") return Format::Jsonl;
  return std::nullopt;
}

// Writes via a sibling temporary and renames, so a failed run never leaves a
// truncated output behind.
template <class Writer>
void write_output(const std::string& path, std::ostream& out, Writer&& write) {
  if (path == "-") {
    write(out);
    return;
  }
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp";
  std::error_code ec;
  try {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write(f);
    f.flush();
    if (!f) throw IoError("write to '" + path + "' failed");
  } catch (...) {
    fs::remove(tmp, ec);
    throw;
  }
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot move output into place at '" + path + "': " + ec.message());
}

struct FileResult {
  TallyTable table;
  IngestReport report;
  std::exception_ptr error;
};

FileResult ingest_file(const std::string& path, Format format, Policy policy) {
  FileResult r;
  try {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    r.report = ingest_stream(in, format, policy,
                             [&](const CitationRecord& rec) { add_record(r.table, rec); });
    if (in.bad()) throw IoError("read error in '" + path + "'");
  } catch (...) {
    r.error = std::current_exception();
  }
  return r;
}

void print_report(std::ostream& err, const std::string& path, const IngestReport& rep) {
  err << path << ": accepted=" << rep.accepted << " rejected=" << rep.rejected << '\n';
  for (const auto& issue : rep.first_errors) {
    err << "  line " << issue.line << ": " << issue.reason << '\n';
  }
}

int cmd_aggregate(const std::vector<std::string>& inputs, const std::string& format_name,
                  const std::string& policy_name, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  std::optional<Format> format;
  if (!format_name.empty()) {
    format = parse_format(format_name);
  } else {
    format = format_from_extension(inputs.front());
    if (!format) {
      err << "error: cannot infer the input format of '" << inputs.front()
          << "'; pass --format csv|jsonl\n";
      return kUsageError;
    }
  }
  const Policy policy = *parse_policy(policy_name);

  for (const auto& path : inputs) {
    if (!fs::is_regular_file(path)) {
      err << "error: cannot open input file '" << path << "'\n";
      return kIoError;
    }
  }

  std::vector<FileResult> results(inputs.size());
  const unsigned workers = std::min<std::size_t>(thread_cap(), inputs.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) {
          results[i] = ingest_file(inputs[i], *format, policy);
        }
      });
    }
  }

  TallyTable merged;
  IngestReport total;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto& r = results[i];
    if (r.error) {
      try {
        std::rethrow_exception(r.error);
      } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
      } catch (const LineError& e) {
        err << "error: " << inputs[i] << ":" << e.line() << ": " << e.reason() << '\n';
        return exit_code_for(e.code());
      }
    }
    print_report(err, inputs[i], r.report);
    total.accepted += r.report.accepted;
    total.rejected += r.report.rejected;
    merge_into(merged, r.table);
  }
  if (inputs.size() > 1) {
    err << "total: accepted=" << total.accepted << " rejected=" << total.rejected << '\n';
  }

  write_output(out_path, out, [&](std::ostream& os) { write_tally_csv(os, merged); });
  return kSuccess;
}

int cmd_report(const std::string& tally_path, const ReportOptions& options,
               const std::string& out_dir, std::ostream& err) {
  std::ifstream in(tally_path, std::ios::binary);
  if (!in) {
    err << "error: cannot open tally file '" << tally_path << "'\n";
    return kIoError;
  }
  TallyTable tallies;
  try {
    tallies = read_tally_csv(in);
  } catch (const LineError& e) {
    err << "error: " << tally_path << ":" << e.line() << ": " << e.reason() << '\n';
    return kDataError;
  }
  const Report report = build_report(tallies, options);
  try {
    write_report(report, out_dir);
  } catch (const fs::filesystem_error& e) {
    throw IoError(e.what());
  }
  err << "journals=" << report.metrics.size() << " eligible=" << report.scite_index.count
      << " -> " << out_dir << '\n';
  return kSuccess;
}

int cmd_synth(const SynthParams& params, const std::string& out_path,
              const std::string& format_name, std::ostream& out) {
  params.validate();
  Format format = Format::Jsonl;
  if (!format_name.empty()) {
    format = *parse_format(format_name);
  } else if (auto f = format_from_extension(out_path)) {
    format = *f;
  }
  write_output(out_path, out, [&](std::ostream& os) { write_corpus(os, params, format); });
  return kSuccess;
}

}  // namespace

unsigned thread_cap() {
  if (const char* env = std::getenv("CITEMETRIC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"citemetric: citation-type tallies, scite index and journal statistics"};
  app.name("citemetric");
  app.require_subcommand(1);

  // aggregate
  auto* agg = app.add_subcommand("aggregate", "Fold citation-event files into a tally CSV");
  std::vector<std::string> agg_inputs;
  std::string agg_format;
  std::string agg_policy = "strict";
  std::string agg_out = "-";
  agg->add_option("inputs", agg_inputs, "Input files (CSV or JSONL)")->required();
  agg->add_option("-f,--format", agg_format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  agg->add_option("--policy", agg_policy, "Bad-line policy")
      ->check(CLI::IsMember({"strict", "skip"}))
      ->capture_default_str();
  agg->add_option("-o,--out", agg_out, "Output tally CSV ('-' for stdout)")
      ->capture_default_str();

  // report
  auto* rep = app.add_subcommand("report", "Compute metrics, summaries and figure data");
  std::string rep_input;
  ReportOptions rep_options;
  std::string rep_out = "report";
  rep->add_option("tallies", rep_input, "Tally CSV written by 'aggregate'")->required();
  rep->add_option("--min-citations", rep_options.config.min_total_citations,
                  "Journals need strictly more total citations than this")
      ->capture_default_str();
  rep->add_option("--min-classified", rep_options.config.min_classified,
                  "Journals need at least this many supporting+disputing citations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rep->add_option("--bins", rep_options.histogram_bins, "Histogram bins over [0, 1]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rep->add_option("-o,--out-dir", rep_out, "Output directory")->capture_default_str();

  // synth
  auto* syn = app.add_subcommand("synth", "Generate a seeded synthetic citation corpus");
  SynthParams params = default_paper_regime();
  std::string preset;
  std::string syn_out = "-";
  std::string syn_format;
  syn->add_option("--preset", preset, "Parameter preset applied before other flags")
      ->check(CLI::IsMember({"paper"}));
  syn->add_option("--journals", params.journals, "Number of journals");
  syn->add_option("--mu", params.lognormal_mu, "Lognormal mu of classified totals");
  syn->add_option("--sigma", params.lognormal_sigma, "Lognormal sigma of classified totals");
  syn->add_option("--beta-alpha", params.beta_alpha, "Beta alpha of support propensity");
  syn->add_option("--beta-beta", params.beta_beta, "Beta beta of support propensity");
  syn->add_option("--mention-ratio", params.mention_ratio,
                  "Fraction of citation statements that are mentions");
  syn->add_option("--seed", params.seed, "PRNG seed");
  syn->add_option("-o,--out", syn_out, "Output corpus file ('-' for stdout)")
      ->capture_default_str();
  syn->add_option("-f,--format", syn_format, "Output format (default: from extension, else jsonl)")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (agg->parsed()) {
      return cmd_aggregate(agg_inputs, agg_format, agg_policy, agg_out, out, err);
    }
    if (rep->parsed()) return cmd_report(rep_input, rep_options, rep_out, err);
    if (syn->parsed()) return cmd_synth(params, syn_out, syn_format, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsageError;
}

}  // namespace citemetric::cli
