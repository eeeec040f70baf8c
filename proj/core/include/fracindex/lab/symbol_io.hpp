#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fracindex/lab/heat.hpp"
#include "fracindex/lab/symbol.hpp"

namespace fracindex::lab {

/// Scalar symbol from a sum of terms c*e^{kit}, e.g. "2 + e^{it}",
/// "e^{-3it}", "(1/2-i)e^{2it} - 3i". The coefficient c is a Gaussian
/// rational and defaults to 1.
LoopSymbol parse_symbol_expression(std::string_view text);

/// Accepts an expression string or a Fourier table
/// {"size": s, "coefficients": {"k": [[entry, ...], ...]}} whose entries are
/// complex literals or JSON numbers.
LoopSymbol symbol_from_json(const nlohmann::json& doc);
nlohmann::json symbol_to_json(const LoopSymbol& symbol);

ExactMatrix matrix_from_json(const nlohmann::json& doc, std::string_view where);
nlohmann::json matrix_to_json(const ExactMatrix& m);

/// {"d_plus": [[...]], "rows": n, "cols": m, "gram_e": [[...]], "gram_f": [[...]]};
/// rows and cols are only needed when a dimension is zero.
GradedOperator graded_operator_from_json(const nlohmann::json& doc);
nlohmann::json graded_operator_to_json(const GradedOperator& d);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace fracindex::lab
