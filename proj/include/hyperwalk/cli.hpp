#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperwalk/io.hpp"

namespace hyperwalk::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerdictFail = 1,
  kUsage = 2,
  kInputError = 3,
  kInternal = 4,
};

int exit_code_for(ErrorCode code);

struct RunConfig {
  std::string command;     // schedules | optimize | evaluate | simulate | verify | find | assoc
  std::string subcommand;  // verify: tails; assoc: check | certificate
  std::string pattern_path;
  std::string schedule_path;
  std::string params_path;
  std::string instance_path;
  std::string table_path;
  std::string output_path;

  /// schedules: count-only | list | heuristic; optimize: exhaustive |
  /// heuristic | fixed (with --schedule and no mode flag).
  std::string mode;
  std::uint64_t budget = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 0;  // 0: the check's default
  unsigned jobs = 1;
  std::string margin = "1/1024";
  bool relax_vertex = true;
  bool prune = true;
  std::uint64_t limit = 20;

  std::string check;  // simulate
  int n = 0;          // simulate: 0 means the check's default
  std::uint32_t nmax = 60;
  std::string assoc_case = "i";
  bool via_reduction = false;
};

struct Report {
  io::Json body;
  int exit_code = kOk;
};

/// Seed precedence: explicit flag, then HYPERWALK_SEED, then the default.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Parses argv into a config. On --help or a usage error returns the exit
/// code to use and writes the message to `message`.
std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& config,
                              std::string& message);

/// Dispatches to the owning module. Module errors propagate as exceptions.
Report run(const RunConfig& config);

/// Full process behaviour: parse, run, write the report to stdout or
/// --output, map errors to exit codes.
int main_entry(int argc, const char* const* argv);

}  // namespace hyperwalk::cli
