#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace citemetric::cli {

// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kIoError = 3,
};

// Runs `citemetric <args...>` (args excludes the program name). Data written
// to "-" goes to `out`; diagnostics and ingest reports go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parallelism cap: CITEMETRIC_THREADS if set to a positive integer,
// otherwise the hardware concurrency (at least 1).
unsigned thread_cap();

}  // namespace citemetric::cli
