#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psiapprox/bounds.hpp"

namespace psiapprox::cli {

enum class Command {
  characteristics,
  classify,
  kernel_norm,
  extremal,
  verify_thm1,
  verify_thm2,
  verify_cor1,
  verify_cor2,
  verify_lemmas,
  sweep,
};

enum class Format { csv, text };

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kNonConvergence = 3 };

struct RunConfig {
  Command command = Command::characteristics;
  double alpha = 0.69314718055994531;
  double r = 0.5;
  int n_lo = 25;
  int n_hi = 25;
  std::vector<double> p{1.0};
  std::vector<double> s{2.0};
  std::vector<double> beta{0.0};
  std::string out;  // empty: standard output
  Format format = Format::csv;
  VerifyOptions verify;
  int jobs = 1;
  int samples = 0;  // extremal: emit sampled values instead of a summary
};

/// Parses "25" or "21..49".
std::pair<int, int> parse_n_range(const std::string& text);

/// Comma-separated reals; "inf" and "ln2" are accepted.
std::vector<double> parse_real_list(const std::string& text, const std::string& field);

/// Runs one configured command and writes the report to config.out (or
/// `out`). Diagnostics go to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Command-line entry point: parses argv into a RunConfig and runs it.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace psiapprox::cli
