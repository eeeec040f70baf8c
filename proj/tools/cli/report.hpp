#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace fracindex::cli {

enum class OutputFormat { kJson, kCsv, kMarkdown };

OutputFormat parse_format(std::string_view name);

/// A table of typed cells plus command-specific fields that only the JSON
/// emitter shows in full. Markdown prints `notes` under the table.
struct Report {
  Report() = default;
  Report(std::string command_name, std::vector<std::string> column_names)
      : command(std::move(command_name)), columns(std::move(column_names)) {}

  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  nlohmann::json extra = nlohmann::json::object();
  std::vector<std::string> notes;

  void add_row(std::vector<nlohmann::json> row);
};

void emit(const Report& report, OutputFormat format, std::ostream& out);

/// Fixed-precision rendering so identical inputs give identical bytes.
std::string format_double(double x);
std::string format_bound(double x);

}  // namespace fracindex::cli
