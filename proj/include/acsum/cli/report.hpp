#pragma once

#include "acsum/cli/resolve.hpp"
#include "acsum/decision.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace acsum::cli {

/// Exit codes of the command line tool.
enum ExitCode : int { kAdmits = 0, kNotAdmits = 1, kUnknown = 2, kInputError = 3, kUsageError = 4 };

int exit_code_for(Status status);

struct Report {
  std::string query;  // echoed in canonical form
  std::vector<std::string> summand_labels;
  Verdict verdict;

  int exit_code() const { return exit_code_for(verdict.status); }

  /// "key = value" lines, one fact per line.
  std::string text() const;

  /// The same content as a single-line JSON record with sorted keys.
  std::string machine() const;
};

Report make_report(const ResolvedQuery& query, Verdict verdict);

struct Options {
  std::string query;
  std::vector<std::string> manifold_files;
  std::optional<std::string> structures_file;
  std::optional<std::string> modulus_file;
  std::uint64_t search_bound = 1'000'000;
  bool machine = false;
};

/// Loads inputs, decides the query and writes the report to `out`. Errors go
/// to `err`. Returns the process exit code.
int run(const Options& options, std::ostream& out, std::ostream& err);

}  // namespace acsum::cli
