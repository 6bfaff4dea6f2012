#include "acsum/cli/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Decide and certify almost complex structures on connected sums"};
  acsum::cli::Options options;
  app.add_option("--query", options.query, "Connected-sum expression, e.g. \"3*CP(4) # conj(CP(4))\"")->required();
  app.add_option("--manifolds", options.manifold_files, "Manifold definition files")->check(CLI::ExistingFile);
  app.add_option("--structures", options.structures_file, "Candidate structure overrides")->check(CLI::ExistingFile);
  app.add_option("--modulus-table", options.modulus_file, "Orders of o[S^2n] by n")->check(CLI::ExistingFile);
  app.add_option("--search-bound", options.search_bound, "Maximum assignments explored")
      ->check(CLI::PositiveNumber);
  app.add_flag("--machine", options.machine, "Emit a single-line JSON record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : acsum::cli::kUsageError;
  }
  return acsum::cli::run(options, std::cout, std::cerr);
}
