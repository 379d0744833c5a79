#pragma once

#include "w1g/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace w1g {

enum class OutputFormat { json, text };

struct RunConfig {
  int genus = 1;
  int domain_radius = 2;
  int value_radius = 2;
  int coboundary_radius = -1;  // negative: same as value_radius
  Flavor flavor = Flavor::wedge;
  std::string component = "all";
  Truncation truncation = Truncation::finite_support;
  std::uint64_t seed = 1;
  int samples = 500;
  OutputFormat format = OutputFormat::json;
  std::string output;  // empty: standard output
  std::string input;   // cochain, k-map, element or assignment file
  // make-cochain
  std::string kind = "delta";
  std::string scale = "1";
  // kernel
  bool with_basis = false;
  Exec exec = Exec::parallel;
};

/// Exit statuses.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;

struct RunResult {
  int exit_code = kExitPass;
  Json report;
  std::string rendered;  // report in the configured format
};

std::vector<std::string_view> subcommands();

/// Runs one subcommand in-process. Never throws for bad input: failures are
/// mapped to exit statuses and described in the report.
RunResult run(std::string_view subcommand, const RunConfig& config);

/// Writes the rendered report to config.output (or standard output).
void write_report(const RunResult& result, const RunConfig& config);

std::string render_text(const Json& report);

}  // namespace w1g
