#include "fracindex/lab/symbol_io.hpp"

#include <cctype>
#include <fstream>

#include "fracindex/error.hpp"

namespace fracindex::lab {
namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  std::map<int, GaussianRational> parse() {
    if (text_.empty()) fail("empty symbol expression");
    std::map<int, GaussianRational> out;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [k, c] = term();
      out[k] += sign < 0 ? -c : c;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, what + " at position " + std::to_string(pos_) + " in symbol '" + text_ + "'");
  }

  bool at_exponential() const { return text_.compare(pos_, 3, "e^{") == 0; }

  std::pair<int, GaussianRational> term() {
    GaussianRational c(1);
    bool has_coefficient = false;
    if (peek() == '(') {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      c = literal(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      has_coefficient = true;
    } else if (!at_exponential()) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/' || peek() == '.')) ++pos_;
      if (peek() == 'i') ++pos_;
      if (pos_ == start) fail("expected a coefficient or e^{kit}");
      c = literal(text_.substr(start, pos_ - start));
      has_coefficient = true;
    }
    if (peek() == '*') {
      if (!has_coefficient) fail("dangling '*'");
      ++pos_;
      if (!at_exponential()) fail("expected e^{kit} after '*'");
    }
    if (!at_exponential()) return {0, c};
    pos_ += 3;
    const std::size_t close = text_.find('}', pos_);
    if (close == std::string::npos) fail("unterminated exponent");
    std::string body = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    if (body.size() < 2 || body.compare(body.size() - 2, 2, "it") != 0) fail("exponent must have the form kit");
    body.resize(body.size() - 2);
    int k = 1;
    if (body == "-") {
      k = -1;
    } else if (!body.empty() && body != "+") {
      try {
        std::size_t used = 0;
        k = std::stoi(body, &used);
        if (used != body.size()) fail("bad frequency '" + body + "'");
      } catch (const std::logic_error&) {
        fail("bad frequency '" + body + "'");
      }
    }
    return {k, c};
  }

  GaussianRational literal(const std::string& s) const {
    try {
      return GaussianRational::parse(s);
    } catch (const Error&) {
      fail("bad coefficient '" + s + "'");
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
};

GaussianRational entry_from_json(const nlohmann::json& v, std::string_view where) {
  if (v.is_string()) return GaussianRational::parse(v.get<std::string>());
  if (v.is_number_integer()) return GaussianRational(Rational(v.get<long long>()));
  if (v.is_number_float()) return GaussianRational(Rational::from_double(v.get<double>()));
  if (v.is_array() && v.size() == 2) return {entry_from_json(v[0], where).re, entry_from_json(v[1], where).re};
  throw Error(ErrorCode::kSchema, std::string(where) + ": matrix entries must be strings, numbers or [re, im] pairs");
}

}  // namespace

LoopSymbol parse_symbol_expression(std::string_view text) { return LoopSymbol::scalar(ExpressionParser(text).parse()); }

ExactMatrix matrix_from_json(const nlohmann::json& doc, std::string_view where) {
  if (!doc.is_array()) throw Error(ErrorCode::kSchema, std::string(where) + " must be an array of rows");
  const std::size_t rows = doc.size();
  const std::size_t cols = rows == 0 ? 0 : doc[0].size();
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!doc[r].is_array() || doc[r].size() != cols) {
      throw Error(ErrorCode::kSchema, std::string(where) + ": row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry_from_json(doc[r][c], where);
  }
  return m;
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

LoopSymbol symbol_from_json(const nlohmann::json& doc) {
  if (doc.is_string()) return parse_symbol_expression(doc.get<std::string>());
  if (!doc.is_object()) throw Error(ErrorCode::kSchema, "symbol must be an expression string or an object");
  if (doc.contains("expression")) return parse_symbol_expression(doc.at("expression").get<std::string>());
  if (!doc.contains("size") || !doc.contains("coefficients")) {
    throw Error(ErrorCode::kSchema, "symbol object needs 'size' and 'coefficients'");
  }
  const auto size = doc.at("size").get<std::size_t>();
  const auto& table = doc.at("coefficients");
  if (!table.is_object()) throw Error(ErrorCode::kSchema, "'coefficients' must map frequencies to matrices");
  std::map<int, ExactMatrix> coeffs;
  for (const auto& [key, value] : table.items()) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kSchema, "frequency key '" + key + "' is not an integer");
    }
    ExactMatrix m = value.is_array() && !value.empty() && value[0].is_array()
                        ? matrix_from_json(value, "coefficient " + key)
                        : ExactMatrix::scalar(1, entry_from_json(value, "coefficient " + key));
    if (m.rows() != size || m.cols() != size) {
      throw Error(ErrorCode::kSchema, "coefficient " + key + " is not " + std::to_string(size) + "x" + std::to_string(size));
    }
    coeffs.try_emplace(k, size, size).first->second += m;
  }
  return LoopSymbol(size, std::move(coeffs));
}

nlohmann::json symbol_to_json(const LoopSymbol& symbol) {
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [k, c] : symbol.coefficients()) table[std::to_string(k)] = matrix_to_json(c);
  return {{"size", symbol.size()}, {"coefficients", std::move(table)}};
}

GradedOperator graded_operator_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("d_plus")) throw Error(ErrorCode::kSchema, "graded operator needs 'd_plus'");
  GradedOperator d;
  d.d_plus = matrix_from_json(doc.at("d_plus"), "d_plus");
  if (doc.contains("rows") || doc.contains("cols")) {
    const auto rows = doc.value("rows", d.d_plus.rows());
    const auto cols = doc.value("cols", d.d_plus.cols());
    if (d.d_plus.rows() == 0 || d.d_plus.cols() == 0) {
      d.d_plus = ExactMatrix(rows, cols);
    } else if (rows != d.d_plus.rows() || cols != d.d_plus.cols()) {
      throw Error(ErrorCode::kSchema, "d_plus does not match the declared rows and cols");
    }
  }
  if (doc.contains("gram_e")) d.gram_e = matrix_from_json(doc.at("gram_e"), "gram_e");
  if (doc.contains("gram_f")) d.gram_f = matrix_from_json(doc.at("gram_f"), "gram_f");
  validate(d);
  return d;
}

nlohmann::json graded_operator_to_json(const GradedOperator& d) {
  nlohmann::json out = {{"rows", d.dim_f()}, {"cols", d.dim_e()}, {"d_plus", matrix_to_json(d.d_plus)}};
  if (d.gram_e) out["gram_e"] = matrix_to_json(*d.gram_e);
  if (d.gram_f) out["gram_f"] = matrix_to_json(*d.gram_f);
  return out;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

}  // namespace fracindex::lab
