#include "cli/report.hpp"

#include <cstdio>

#include "fracindex/error.hpp"

namespace fracindex::cli {
namespace {

std::string cell_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string markdown_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "markdown" || name == "md") return OutputFormat::kMarkdown;
  throw Error(ErrorCode::kUnknownName, "unknown output format '" + std::string(name) + "' (expected json, csv or markdown)");
}

void Report::add_row(std::vector<nlohmann::json> row) {
  if (row.size() != columns.size()) throw Error(ErrorCode::kInternal, "report row does not match the columns");
  rows.push_back(std::move(row));
}

void emit(const Report& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kJson: {
      nlohmann::json doc = report.extra;
      doc["command"] = report.command;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : report.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = row[i];
        rows.push_back(std::move(obj));
      }
      doc["rows"] = std::move(rows);
      if (!report.notes.empty()) doc["notes"] = report.notes;
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << csv_escape(report.columns[i]);
      out << '\n';
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
        out << '\n';
      }
      break;
    }
    case OutputFormat::kMarkdown: {
      out << '|';
      for (const auto& c : report.columns) out << ' ' << markdown_escape(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < report.columns.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& row : report.rows) {
        out << '|';
        for (const auto& v : row) out << ' ' << markdown_escape(cell_text(v)) << " |";
        out << '\n';
      }
      if (!report.notes.empty()) {
        out << '\n';
        for (const auto& n : report.notes) out << n << '\n';
      }
      break;
    }
  }
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_bound(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace fracindex::cli
