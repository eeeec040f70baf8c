#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "fracindex/error.hpp"
#include "fracindex/genera.hpp"
#include "fracindex/index_engine.hpp"
#include "fracindex/lab/experiments.hpp"
#include "fracindex/lab/heat.hpp"
#include "fracindex/lab/symbol_io.hpp"
#include "fracindex/manifold.hpp"
#include "fracindex/manifold_io.hpp"

namespace fracindex::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

bool is_file(const std::string& s) {
  std::error_code ec;
  return fs::is_regular_file(s, ec);
}

ManifoldModel resolve_manifold(const std::string& name) {
  if (is_file(name) || name.ends_with(".json")) return load_manifold_file(name);
  return builtin(name);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

int parse_int(const std::string& text, std::string_view what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::kParse, std::string(what) + " '" + text + "' is not an integer");
}

CharData resolve_bundle(const ManifoldModel& m, const std::string& spec) {
  if (is_file(spec)) return bundle_from_json(m.ring, lab::read_json_file(spec));
  if (spec == "trivial") return CharData::trivial(m.ring, 1);
  if (spec.starts_with("trivial:")) return CharData::trivial(m.ring, parse_int(spec.substr(8), "bundle rank"));
  if (spec.starts_with("line:")) return CharData::line(parse_class(m.ring, spec.substr(5)));
  throw Error(ErrorCode::kParse, "bundle '" + spec + "' is neither a file nor one of trivial, trivial:<rank>, line:<class>");
}

CohClass class_from_value(const RingPtr& ring, const json& v) {
  return v.is_string() ? parse_class(ring, v.get<std::string>()) : class_from_json(ring, v);
}

TwistSpec resolve_twist(const ManifoldModel& m, const std::string& spec) {
  TwistSpec twist;
  if (is_file(spec)) {
    const json doc = lab::read_json_file(spec);
    if (doc.contains("l_prime_c1")) twist.l_prime_c1 = class_from_value(m.ring, doc.at("l_prime_c1"));
    if (doc.contains("l_c1")) twist.l_c1 = class_from_value(m.ring, doc.at("l_c1"));
    twist.root_order = doc.value("root_order", 1);
    return twist;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParse, "twist entry '" + item + "' is not key=value");
    std::string key = trim(std::string_view(item).substr(0, eq));
    const std::string value = trim(std::string_view(item).substr(eq + 1));
    for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == "l'" || key == "lprime" || key == "l_prime") {
      twist.l_prime_c1 = parse_class(m.ring, value);
    } else if (key == "l") {
      twist.l_c1 = parse_class(m.ring, value);
    } else if (key == "n") {
      twist.root_order = parse_int(value, "root order");
    } else {
      throw Error(ErrorCode::kParse, "unknown twist key '" + key + "' (expected lprime, l or n)");
    }
  }
  return twist;
}

std::string yes_no(const std::optional<bool>& flag) {
  if (!flag) return "unknown";
  return *flag ? "true" : "false";
}

// ---------------------------------------------------------------- catalog

Report catalog_list() {
  Report r{"catalog list", {"name", "label", "real_dimension", "complex", "spin", "basis_size"}};
  for (const auto& name : builtin_examples()) {
    const ManifoldModel m = builtin(name);
    r.add_row({name, m.label, m.real_dimension, m.is_complex, yes_no(m.spin), m.ring->dimension()});
  }
  return r;
}

Report catalog_show(const RunConfig& config) {
  if (config.manifolds.empty()) throw Error(ErrorCode::kDomain, "catalog show needs a manifold name or file");
  Report r{"catalog show", {"manifold", "property", "value"}};
  json models = json::array();
  for (const auto& name : config.manifolds) {
    const ManifoldModel m = resolve_manifold(name);
    const auto add = [&](std::string property, json value) { r.add_row({m.label, std::move(property), std::move(value)}); };
    add("real_dimension", m.real_dimension);
    add("complex", m.is_complex);
    add("spin", yes_no(m.spin));
    add("c1_parity_even", yes_no(m.c1_parity_even));
    std::string basis;
    for (std::size_t i = 0; i < m.ring->dimension(); ++i) {
      basis += (i ? ", " : "") + m.ring->monomial_name(i);
    }
    add("basis", basis);
    const char prefix = m.tangent.mode() == ClassMode::kChern ? 'c' : 'p';
    for (int i = 1; i <= static_cast<int>(m.tangent.classes().size()); ++i) {
      add(std::string(1, prefix) + std::to_string(i), m.tangent.cls(i).str());
    }
    add("integral A-hat", integrate(a_hat_class(m)).str());
    if (m.is_complex) add("integral Todd", integrate(todd_class(m)).str());
    for (const auto& [key, value] : m.annotations) add("annotation " + key, value);
    models.push_back(to_json(m));
  }
  r.extra["models"] = std::move(models);
  return r;
}

// ---------------------------------------------------------------- genus

CohClass manifold_genus(const GenusSeries& series, const ManifoldModel& m) {
  if (series.genus == Genus::kTodd) {
    if (!m.is_complex) throw Error(ErrorCode::kNotComplex, "Todd class of '" + m.label + "' needs a complex model");
    return genus_class(series, m.tangent);
  }
  const CharData pontryagin = m.tangent.mode() == ClassMode::kChern ? pontryagin_from_chern(m.tangent) : m.tangent;
  return genus_class(series, pontryagin);
}

Report genus_report(const RunConfig& config) {
  const auto genus = parse_genus(config.series);
  if (!genus) throw Error(ErrorCode::kUnknownName, "unknown genus '" + config.series + "' (expected a-hat, todd or l)");
  std::vector<ManifoldModel> models;
  int order = config.order.value_or(0);
  for (const auto& name : config.manifolds) {
    models.push_back(resolve_manifold(name));
    if (!config.order) order = std::max(order, models.back().ring->top_degree() / 2);
  }
  if (!config.order && models.empty()) order = 6;
  const GenusSeries series = genus_series(*genus, order);

  json coefficients = json::array();
  for (const auto& c : series.coefficients) coefficients.push_back(c.str());

  Report r;
  r.command = "genus";
  r.extra["series"] = std::string(genus_name(*genus));
  r.extra["order"] = order;
  r.extra["coefficients"] = coefficients;
  if (models.empty()) {
    r.columns = {"k", "coefficient"};
    for (std::size_t k = 0; k < series.coefficients.size(); ++k) r.add_row({k, series.coefficients[k].str()});
    return r;
  }
  r.columns = {"manifold", "genus", "class", "integral"};
  for (const auto& m : models) {
    const CohClass cls = manifold_genus(series, m);
    r.add_row({m.label, std::string(genus_name(*genus)), cls.str(), integrate(cls).str()});
  }
  return r;
}

// ---------------------------------------------------------------- index

Report index_report(const RunConfig& config) {
  if (config.manifolds.empty()) throw Error(ErrorCode::kDomain, "index needs at least one --manifold");
  const std::string formula = config.formula.value_or(config.twist ? "spinc" : "dirac");
  if (formula != "dirac" && formula != "spinc" && formula != "dolbeault" && formula != "all") {
    throw Error(ErrorCode::kUnknownName, "unknown formula '" + formula + "' (expected dirac, spinc, dolbeault or all)");
  }
  std::vector<IndexReport> reports;
  for (const auto& name : config.manifolds) {
    const ManifoldModel m = resolve_manifold(name);
    const CharData bundle = resolve_bundle(m, config.bundle);
    const TwistSpec twist = config.twist ? resolve_twist(m, *config.twist) : TwistSpec{};
    if (formula == "dirac" || formula == "all") reports.push_back(dirac_index(m, bundle));
    if (formula == "spinc" || (formula == "all" && config.twist)) reports.push_back(spinc_index(m, bundle, twist));
    if (formula == "dolbeault" || (formula == "all" && m.is_complex)) reports.push_back(dolbeault_index(m));
  }
  Report r{"index", {"manifold", "formula", "value", "denominator", "integer", "digest"}};
  const auto rows = fractionality_report(reports);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    r.add_row({rows[i].label, rows[i].formula, rows[i].value.str(), rows[i].denominator.get_str(), rows[i].is_integer,
               reports[i].digest});
  }
  return r;
}

// ---------------------------------------------------------------- lab

struct NamedSymbol {
  std::string label;
  lab::LoopSymbol symbol;
};

NamedSymbol resolve_symbol(const std::string& text) {
  if (is_file(text)) return {text, lab::symbol_from_json(lab::read_json_file(text))};
  return {text, lab::parse_symbol_expression(text)};
}

NamedSymbol symbol_from_input(const json& v) {
  if (v.is_string()) return resolve_symbol(v.get<std::string>());
  return {v.dump(), lab::symbol_from_json(v)};
}

struct LabInput {
  json doc = json::object();
  std::vector<NamedSymbol> symbols;
};

LabInput lab_input(const RunConfig& config) {
  LabInput in;
  if (config.input) in.doc = lab::read_json_file(*config.input);
  for (const auto& s : config.symbols) in.symbols.push_back(resolve_symbol(s));
  if (in.symbols.empty()) {
    for (const char* key : {"symbol", "symbols", "path"}) {
      if (!in.doc.contains(key)) continue;
      const json& v = in.doc.at(key);
      if (v.is_array()) {
        for (const auto& item : v) in.symbols.push_back(symbol_from_input(item));
      } else {
        in.symbols.push_back(symbol_from_input(v));
      }
    }
  }
  return in;
}

lab::LabOptions lab_options(const RunConfig& config, const json& doc) {
  lab::LabOptions o;
  o.truncation = doc.value("K", config.truncation);
  if (config.truncation != 64) o.truncation = config.truncation;
  if (config.order_m) {
    o.order = config.order_m;
  } else if (doc.contains("M")) {
    o.order = doc.at("M").get<int>();
  }
  if (config.window) {
    o.window = config.window;
  } else if (doc.contains("W")) {
    o.window = doc.at("W").get<int>();
  }
  o.index_tolerance = config.tolerance_index;
  o.auto_adjust = true;
  return o;
}

std::string mode_name(const lab::LoopSymbol& s) { return s.mode() == lab::SymbolMode::kExact ? "exact" : "numeric"; }

std::string index_text(const lab::IndexValue& v) {
  if (v.exact) return v.exact->is_real() ? v.exact->re.str() : v.exact->str();
  return format_double(v.value.real());
}

class NoteCollector {
 public:
  void add(const lab::IndexValue& v) {
    for (const auto& n : v.notes) {
      if (seen_.insert(n).second) notes_.push_back(n);
    }
  }
  void flush(Report& r, std::ostream& err) const {
    for (const auto& n : notes_) {
      err << "fracindex: warning: " << n << '\n';
      r.notes.push_back("adjusted: " + n);
    }
  }

 private:
  std::set<std::string> seen_;
  std::vector<std::string> notes_;
};

const NamedSymbol& single_symbol(const LabInput& in, std::string_view action) {
  if (in.symbols.size() != 1) {
    throw Error(ErrorCode::kDomain, "lab " + std::string(action) + " needs exactly one --symbol, got " +
                                        std::to_string(in.symbols.size()));
  }
  return in.symbols.front();
}

Report lab_winding(const LabInput& in) {
  const auto& s = single_symbol(in, "winding");
  Report r{"lab winding", {"symbol", "mode", "winding"}};
  r.add_row({s.label, mode_name(s.symbol), lab::winding_number(s.symbol)});
  return r;
}

Report lab_index(const LabInput& in, const lab::LabOptions& options, std::ostream& err) {
  const auto& s = single_symbol(in, "index");
  const lab::IndexValue v = lab::symbol_index(s.symbol, options);
  Report r{"lab index",
           {"symbol", "mode", "K", "M", "W", "index", "imag", "error_bound", "exact", "winding"}};
  r.add_row({s.label, mode_name(s.symbol), v.truncation, v.order, v.window, index_text(v), format_double(v.value.imag()),
             format_bound(v.error_bound), v.is_exact(), lab::winding_number(s.symbol)});
  r.extra["trace_ab"] = {format_double(v.trace_ab.real()), format_double(v.trace_ab.imag())};
  r.extra["trace_ba"] = {format_double(v.trace_ba.real()), format_double(v.trace_ba.imag())};
  NoteCollector notes;
  notes.add(v);
  notes.flush(r, err);
  return r;
}

Report lab_homotopy(const RunConfig& config, const LabInput& in, const lab::LabOptions& options, std::ostream& err) {
  if (in.symbols.empty()) throw Error(ErrorCode::kDomain, "lab homotopy needs the path nodes as --symbol arguments");
  lab::SymbolPath path;
  for (const auto& s : in.symbols) path.nodes.push_back(s.symbol);
  const int steps = config.steps != 11 ? config.steps : in.doc.value("steps", config.steps);
  const auto result = lab::homotopy_sweep(path, steps, options);
  Report r{"lab homotopy", {"t", "mode", "index", "error_bound"}};
  NoteCollector notes;
  for (const auto& step : result.steps) {
    r.add_row({step.t.str(), step.index.is_exact() ? "exact" : "numeric", index_text(step.index),
               format_bound(step.index.error_bound)});
    notes.add(step.index);
  }
  r.extra["spread"] = format_double(result.spread);
  r.extra["constant"] = result.constant;
  r.notes.push_back("spread = " + format_double(result.spread) + ", constant = " + (result.constant ? "true" : "false"));
  notes.flush(r, err);
  return r;
}

Report lab_compose(const LabInput& in, const lab::LabOptions& options, std::ostream& err) {
  if (in.symbols.size() != 2) throw Error(ErrorCode::kDomain, "lab compose needs exactly two --symbol arguments (a1 then a2)");
  const auto res = lab::composition_additivity_check(in.symbols[0].symbol, in.symbols[1].symbol, options);
  Report r{"lab compose", {"a1", "a2", "lhs", "rhs", "ind_a1", "ind_a2", "agree"}};
  const std::string rhs = res.exact_sum ? (res.exact_sum->is_real() ? res.exact_sum->re.str() : res.exact_sum->str())
                                        : format_double(res.sum.real());
  r.add_row({in.symbols[0].label, in.symbols[1].label, index_text(res.product), rhs, index_text(res.first),
             index_text(res.second), res.agree});
  NoteCollector notes;
  for (const auto* v : {&res.first, &res.second, &res.product}) notes.add(*v);
  notes.flush(r, err);
  return r;
}

Report lab_adjoint(const RunConfig& config, const LabInput& in, const lab::LabOptions& options, std::ostream& err) {
  const auto& s = single_symbol(in, "adjoint");
  const int samples = config.samples != 5 ? config.samples : in.doc.value("samples", config.samples);
  const auto res = lab::adjoint_index_check(s.symbol, options, samples);
  Report r{"lab adjoint", {"operator", "angle", "index", "imag"}};
  NoteCollector notes;
  r.add_row({"A", nullptr, index_text(res.index), format_double(res.index.value.imag())});
  r.add_row({"A*", nullptr, index_text(res.adjoint_index), format_double(res.adjoint_index.value.imag())});
  notes.add(res.index);
  notes.add(res.adjoint_index);
  for (const auto& sample : res.rotation) {
    r.add_row({"rotation", format_double(sample.angle), index_text(sample.index), format_double(sample.index.value.imag())});
    notes.add(sample.index);
  }
  r.extra["antisymmetric"] = res.antisymmetric;
  r.extra["real"] = res.real;
  r.extra["rotation_zero"] = res.rotation_zero;
  r.notes.push_back(std::string("antisymmetric = ") + (res.antisymmetric ? "true" : "false") +
                    ", real = " + (res.real ? "true" : "false") + ", rotation_zero = " + (res.rotation_zero ? "true" : "false"));
  notes.flush(r, err);
  return r;
}

Report lab_heat(const RunConfig& config, const LabInput& in) {
  lab::GradedOperator d;
  if (config.operator_path) {
    d = lab::graded_operator_from_json(lab::read_json_file(*config.operator_path));
  } else if (in.doc.contains("operator")) {
    d = lab::graded_operator_from_json(in.doc.at("operator"));
  } else if (config.seed) {
    std::mt19937_64 rng(*config.seed);
    d = lab::random_graded_operator(rng, config.max_dim);
  } else {
    throw Error(ErrorCode::kDomain, "lab heat needs --operator, an input document with 'operator', or --seed");
  }
  std::vector<double> t_grid = config.t_grid;
  if (t_grid.empty()) t_grid = in.doc.value("t_grid", std::vector<double>{0.1, 1.0, 10.0});
  const auto res = lab::mckean_singer_check(d, t_grid);
  Report r{"lab heat", {"t", "supertrace", "kernel_index"}};
  for (const auto& s : res.supertraces) r.add_row({format_double(s.t), format_double(s.value), res.index()});
  r.extra["dim_e"] = d.dim_e();
  r.extra["dim_f"] = d.dim_f();
  r.extra["kernel_plus"] = res.kernel_plus;
  r.extra["kernel_minus"] = res.kernel_minus;
  r.extra["stddev"] = format_bound(res.stddev);
  r.extra["max_deviation"] = format_bound(res.max_deviation);
  r.notes.push_back("D+ : " + std::to_string(d.dim_e()) + " -> " + std::to_string(d.dim_f()) + ", dim ker D+ = " +
                    std::to_string(res.kernel_plus) + ", dim ker D+* = " + std::to_string(res.kernel_minus) +
                    ", stddev = " + format_bound(res.stddev));
  return r;
}

Report lab_report(const RunConfig& config, std::ostream& err) {
  const LabInput in = lab_input(config);
  const lab::LabOptions options = lab_options(config, in.doc);
  if (config.action == "winding") return lab_winding(in);
  if (config.action == "index") return lab_index(in, options, err);
  if (config.action == "homotopy") return lab_homotopy(config, in, options, err);
  if (config.action == "compose") return lab_compose(in, options, err);
  if (config.action == "adjoint") return lab_adjoint(config, in, options, err);
  if (config.action == "heat") return lab_heat(config, in);
  throw Error(ErrorCode::kUnknownName, "unknown lab experiment '" + config.action + "'");
}

Report build_report(const RunConfig& config, std::ostream& err) {
  if (config.command == "catalog") {
    if (config.action == "list") return catalog_list();
    if (config.action == "show") return catalog_show(config);
    throw Error(ErrorCode::kUnknownName, "unknown catalog action '" + config.action + "' (expected list or show)");
  }
  if (config.command == "genus") return genus_report(config);
  if (config.command == "index") return index_report(config);
  if (config.command == "lab") return lab_report(config, err);
  throw Error(ErrorCode::kUnknownName, "unknown command '" + config.command + "'");
}

fs::path output_path(const std::string& out) {
  fs::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("FRACINDEX_OUT_DIR"); dir != nullptr && *dir != '\0') p = fs::path(dir) / p;
  }
  return p;
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.tolerance_index > 0.0)) throw Error(ErrorCode::kDomain, "--tolerance-index must be positive");
  if (config.truncation < 1) throw Error(ErrorCode::kDomain, "--K must be positive");
  if (config.order_m && *config.order_m < 0) throw Error(ErrorCode::kDomain, "--M must be nonnegative");
  if (config.window && *config.window < 0) throw Error(ErrorCode::kDomain, "--W must be nonnegative");
  if (config.steps < 1) throw Error(ErrorCode::kDomain, "--steps must be positive");
  if (config.samples < 2) throw Error(ErrorCode::kDomain, "--samples must be at least 2");
  for (double t : config.t_grid) {
    if (!(t > 0.0)) throw Error(ErrorCode::kDomain, "heat times must be positive");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const Report report = build_report(config, err);
    if (config.out) {
      const fs::path path = output_path(*config.out);
      if (path.has_parent_path()) fs::create_directories(path.parent_path());
      std::ofstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorCode::kParse, "cannot write " + path.string());
      emit(report, config.format, file);
    } else {
      emit(report, config.format, out);
    }
    return 0;
  } catch (const Error& e) {
    err << "fracindex: error [" << to_string(e.code()) << "]: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "fracindex: error [schema]: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "fracindex: error: " << e.what() << '\n';
  }
  return 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string format = "markdown";

  CLI::App app{"Exact characteristic numbers and desk-scale analytic index experiments", "fracindex"};
  app.require_subcommand(1);
  app.add_option("--format", format, "Output format: json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_option("--out", config.out, "Write the report to this file ($FRACINDEX_OUT_DIR resolves relative paths)");
  app.add_option("--tolerance-index", config.tolerance_index, "Tolerance for numeric lab indices");

  auto* catalog = app.add_subcommand("catalog", "Browse the built-in manifold models");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List the built-in models");
  auto* show = catalog->add_subcommand("show", "Show one or more models");
  show->add_option("manifold", config.manifolds, "Model name or JSON file")->required();

  auto* genus = app.add_subcommand("genus", "Genus series and genus classes");
  genus->add_option("--series", config.series, "a-hat, todd or l");
  genus->add_option("--order", config.order, "Series order");
  genus->add_option("--manifold", config.manifolds, "Model name or JSON file (repeatable)");

  auto* index = app.add_subcommand("index", "Exact index formulas");
  index->add_option("--manifold", config.manifolds, "Model name or JSON file (repeatable)")->required();
  index->add_option("--bundle", config.bundle, "trivial, trivial:<rank>, line:<class> or a JSON file");
  index->add_option("--twist", config.twist, "lprime=<class>,l=<class>,n=<N> or a JSON file");
  index->add_option("--formula", config.formula, "dirac, spinc, dolbeault or all");

  auto* lab_cmd = app.add_subcommand("lab", "Half-line Toeplitz and heat experiments");
  lab_cmd->require_subcommand(1);
  for (const char* name : {"winding", "index", "homotopy", "compose", "adjoint", "heat"}) {
    auto* sub = lab_cmd->add_subcommand(name);
    sub->add_option("--symbol", config.symbols, "Symbol expression such as \"2+e^{it}\" or a JSON Fourier table");
    sub->add_option("--input", config.input, "Experiment JSON document");
    sub->add_option("--K", config.truncation, "Mode cutoff K");
    sub->add_option("--M", config.order_m, "Parametrix order M");
    sub->add_option("--W", config.window, "Trace window W");
    if (std::string_view(name) == "homotopy") sub->add_option("--steps", config.steps, "Number of parameter samples");
    if (std::string_view(name) == "adjoint") sub->add_option("--samples", config.samples, "Rotation angles in [0, pi/2]");
    if (std::string_view(name) == "heat") {
      sub->add_option("--operator", config.operator_path, "Graded operator JSON file");
      sub->add_option("--seed", config.seed, "Random operator seed");
      sub->add_option("--max-dim", config.max_dim, "Random operator dimension bound");
      sub->add_option("--t", config.t_grid, "Heat time (repeatable)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  config.format = parse_format(format);
  for (const auto* sub : app.get_subcommands()) {
    config.command = sub->get_name();
    for (const auto* action : sub->get_subcommands()) config.action = action->get_name();
  }
  return run(config, out, err);
}

}  // namespace fracindex::cli
