#pragma once

#include "chainscope/systems.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chainscope {

enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailure = 1,
  kExitValidation = 2,
  kExitUndecided = 3,
};

/// One analysis request. Mirrors the command-line flags and the JSON config file.
struct RunConfig {
  std::string analysis;  ///< relations | cr | strong | nested | locate | paper
  SystemConfig system;
  std::optional<double> eps;
  std::optional<std::string> schedule;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::vector<std::string> set;
  std::string mode = "exact";
  std::vector<std::string> metrics;
  std::size_t k_max = 10000;
  unsigned threads = 1;
  bool include_values = false;  ///< strong: emit the full value matrix
  std::optional<std::string> out;
  std::optional<std::string> dot;
  std::vector<std::string> only;    ///< paper: case-name prefixes
  double fault_sigma1_scale = 1.0;  ///< paper: test hook, scales the sigma1 metric
};

/// Parses a JSON config. Throws ConfigError naming the offending field, or
/// ArgumentError with line and column for malformed JSON.
RunConfig parse_run_config(std::string_view json_text);

const std::vector<std::string>& analysis_names();

struct RunResult {
  int exit_code = kExitOk;
  std::string report;      ///< JSON, empty on validation failure
  std::string dot;         ///< Graphviz digraph, empty unless requested
  std::string diagnostic;  ///< one line, empty on success
};

/// Runs one analysis. Never throws for bad input: validation problems give
/// exit code 2 with a diagnostic, undecided nested questions exit code 3.
RunResult run(const RunConfig& config);

struct PaperSuiteOptions {
  std::vector<std::string> only;
  double sigma1_metric_scale = 1.0;
};

const std::vector<std::string>& paper_case_names();

/// Runs the builtin golden cases. Exit code 1 when any selected case fails.
RunResult run_paper_suite(const PaperSuiteOptions& options = {});

}  // namespace chainscope
