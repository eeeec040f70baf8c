#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace fracindex::cli {

struct RunConfig {
  std::string command;  // catalog, genus, index, lab
  std::string action;   // catalog: list|show; lab: winding|index|homotopy|compose|adjoint|heat

  OutputFormat format = OutputFormat::kMarkdown;
  std::optional<std::string> out;

  // catalog / genus / index
  std::vector<std::string> manifolds;
  std::string bundle = "trivial";
  std::optional<std::string> twist;
  std::optional<std::string> formula;
  std::string series = "a-hat";
  std::optional<int> order;

  // lab
  std::vector<std::string> symbols;
  std::optional<std::string> input;
  std::optional<std::string> operator_path;
  std::optional<std::uint64_t> seed;
  std::size_t max_dim = 12;
  int steps = 11;
  int samples = 5;
  std::vector<double> t_grid;
  double tolerance_index = 1e-9;
  int truncation = 64;
  std::optional<int> order_m;
  std::optional<int> window;
};

/// Throws Error(kDomain) for non-positive tolerances, K or steps.
void validate(const RunConfig& config);

/// Runs one command. The report goes to `out` (or to the --out file,
/// resolved against $FRACINDEX_OUT_DIR when relative); diagnostics and
/// warnings go to `err`. Returns 0 on success and 1 on any failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line into a RunConfig and runs it. Usage errors return 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracindex::cli
