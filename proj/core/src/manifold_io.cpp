#include "fracindex/manifold_io.hpp"

#include <cctype>
#include <fstream>

#include "fracindex/error.hpp"

namespace fracindex {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) { throw Error(ErrorCode::kSchema, message); }

const json& require(const json& doc, const char* key, json::value_t type, std::string_view where) {
  if (!doc.is_object() || !doc.contains(key)) schema_error(std::string(where) + ": missing key '" + key + "'");
  const json& v = doc.at(key);
  const bool ok = v.type() == type ||
                  (type == json::value_t::number_integer && v.type() == json::value_t::number_unsigned);
  if (!ok) schema_error(std::string(where) + ": key '" + key + "' has type " + v.type_name());
  return v;
}

int require_int(const json& doc, const char* key, std::string_view where) {
  return require(doc, key, json::value_t::number_integer, where).get<int>();
}

bool default_product(const RingModel& ring, std::size_t i, std::size_t j) {
  Exponents total = ring.exponents(i);
  for (std::size_t g = 0; g < total.size(); ++g) total[g] += ring.exponents(j)[g];
  Combination expected;
  if (ring.degree_of(total) <= ring.top_degree()) {
    if (const auto idx = ring.find(total)) expected = {{*idx, Rational(1)}};
  }
  return ring.product(i, j) == expected;
}

}  // namespace

Rational rational_from_json(const json& value, std::string_view where) {
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const Error& e) {
      schema_error(std::string(where) + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  schema_error(std::string(where) + ": expected a rational string \"p/q\", got " + value.dump());
}

CohClass class_from_json(const RingPtr& ring, const json& doc) {
  if (!doc.is_object()) schema_error("class document must be an object {monomial: rational}");
  std::vector<Rational> coeffs(ring->dimension(), Rational(0));
  for (const auto& [mono, value] : doc.items()) {
    Exponents e;
    try {
      e = ring->parse_monomial(mono);
    } catch (const Error& err) {
      schema_error(std::string("class document: ") + err.what());
    }
    const auto idx = ring->find(e);
    if (!idx) schema_error("class document: '" + mono + "' is not a basis monomial");
    coeffs[*idx] += rational_from_json(value, "class coefficient of '" + mono + "'");
  }
  return CohClass(ring, std::move(coeffs));
}

json class_to_json(const CohClass& c) {
  json doc = json::object();
  for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
    if (!c.coefficient(i).is_zero()) doc[c.ring()->monomial_name(i)] = c.coefficient(i).str();
  }
  return doc;
}

CharData bundle_from_json(const RingPtr& ring, const json& doc) {
  const int rank = require_int(doc, "rank", "bundle");
  std::vector<CohClass> classes;
  if (doc.contains("chern")) {
    const json& list = require(doc, "chern", json::value_t::array, "bundle");
    for (const auto& c : list) classes.push_back(class_from_json(ring, c));
  }
  return CharData::chern(ring, rank, std::move(classes));
}

json bundle_to_json(const CharData& bundle) {
  json doc = {{"rank", bundle.rank()}};
  json classes = json::array();
  for (const auto& c : bundle.classes()) classes.push_back(class_to_json(c));
  doc[bundle.mode() == ClassMode::kChern ? "chern" : "pontryagin"] = classes;
  return doc;
}

ManifoldModel load_manifold(const json& doc) {
  if (!doc.is_object()) schema_error("manifold document must be a JSON object");
  const std::string label = require(doc, "label", json::value_t::string, "manifold").get<std::string>();
  const int dim = require_int(doc, "real_dimension", "manifold");
  const bool is_complex = require(doc, "complex", json::value_t::boolean, "manifold").get<bool>();

  RingSpec spec;
  spec.top_degree = dim;
  for (const auto& g : require(doc, "generators", json::value_t::array, "manifold")) {
    const std::string name = require(g, "name", json::value_t::string, "generator").get<std::string>();
    spec.generators.push_back({name, require_int(g, "degree", "generator '" + name + "'")});
  }
  // Generator names and degrees are validated by the ring builder; a scratch
  // ring with just the generators lets us parse monomial strings first.
  RingSpec scratch;
  scratch.generators = spec.generators;
  scratch.basis = {Exponents(spec.generators.size(), 0)};
  scratch.pairing[Exponents(spec.generators.size(), 0)] = Rational(1);
  const RingPtr parser = RingModel::build(scratch, RingModel::Validation::kTrusted);
  const auto parse = [&](const std::string& text, const std::string& where) {
    try {
      return parser->parse_monomial(text);
    } catch (const Error& e) {
      schema_error(where + ": " + e.what());
    }
  };

  for (const auto& b : require(doc, "basis", json::value_t::array, "manifold")) {
    if (!b.is_string()) schema_error("basis entries must be monomial strings");
    spec.basis.push_back(parse(b.get<std::string>(), "basis"));
  }
  if (doc.contains("products")) {
    for (const auto& [key, result] : require(doc, "products", json::value_t::object, "manifold").items()) {
      if (!result.is_object()) schema_error("product '" + key + "' must map to a class document");
      auto& slot = spec.products[parse(key, "product key")];
      for (const auto& [mono, value] : result.items()) {
        slot.emplace_back(parse(mono, "product '" + key + "'"), rational_from_json(value, "product '" + key + "'"));
      }
    }
  }
  for (const auto& [mono, value] : require(doc, "pairing", json::value_t::object, "manifold").items()) {
    spec.pairing[parse(mono, "pairing")] = rational_from_json(value, "pairing of '" + mono + "'");
  }

  const RingPtr ring = RingModel::build(spec, RingModel::Validation::kFull);

  const json& tangent_doc = require(doc, "tangent", json::value_t::object, "manifold");
  const std::string mode = require(tangent_doc, "mode", json::value_t::string, "tangent").get<std::string>();
  std::vector<CohClass> classes;
  for (const auto& c : require(tangent_doc, "classes", json::value_t::array, "tangent")) classes.push_back(class_from_json(ring, c));
  CharData tangent = CharData::trivial(ring, 0);
  if (mode == "chern") {
    const int rank = tangent_doc.contains("rank") ? require_int(tangent_doc, "rank", "tangent") : dim / 2;
    tangent = CharData::chern(ring, rank, std::move(classes));
  } else if (mode == "pontryagin") {
    const int rank = tangent_doc.contains("rank") ? require_int(tangent_doc, "rank", "tangent") : dim;
    tangent = CharData::pontryagin(ring, rank, std::move(classes));
  } else {
    schema_error("tangent mode must be \"chern\" or \"pontryagin\", got \"" + mode + "\"");
  }

  ManifoldModel m{label, dim, ring, std::move(tangent), is_complex, std::nullopt, std::nullopt, {}};
  if (is_complex) {
    if (m.tangent.mode() != ClassMode::kChern) schema_error("complex manifold '" + label + "' needs Chern-mode tangent data");
    m.c1_parity_even = c1_parity_even(m.c1());
    m.spin = m.c1_parity_even;
  } else if (doc.contains("spin")) {
    m.spin = require(doc, "spin", json::value_t::boolean, "manifold").get<bool>();
  }
  if (doc.contains("annotations")) {
    for (const auto& [key, value] : require(doc, "annotations", json::value_t::object, "manifold").items()) {
      if (!value.is_string()) schema_error("annotation '" + key + "' must be a string");
      m.annotations[key] = value.get<std::string>();
    }
  }
  validate(m);
  return m;
}

ManifoldModel load_manifold_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kSchema, "cannot open manifold file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return load_manifold(doc);
}

json to_json(const ManifoldModel& m) {
  const RingModel& ring = *m.ring;
  json doc;
  doc["label"] = m.label;
  doc["real_dimension"] = m.real_dimension;
  doc["complex"] = m.is_complex;
  json gens = json::array();
  for (const auto& g : ring.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  doc["generators"] = gens;
  json basis = json::array();
  for (std::size_t i = 0; i < ring.dimension(); ++i) basis.push_back(ring.monomial_name(i));
  doc["basis"] = basis;
  json products = json::object();
  for (std::size_t i = 1; i < ring.dimension(); ++i) {
    for (std::size_t j = i; j < ring.dimension(); ++j) {
      if (default_product(ring, i, j)) continue;
      json result = json::object();
      for (const auto& t : ring.product(i, j)) result[ring.monomial_name(t.index)] = t.coeff.str();
      products[ring.monomial_name(i) + "*" + ring.monomial_name(j)] = result;
    }
  }
  doc["products"] = products;
  json pairing = json::object();
  for (std::size_t i = 0; i < ring.dimension(); ++i) {
    if (!ring.pairing(i).is_zero()) pairing[ring.monomial_name(i)] = ring.pairing(i).str();
  }
  doc["pairing"] = pairing;
  json classes = json::array();
  for (const auto& c : m.tangent.classes()) classes.push_back(class_to_json(c));
  doc["tangent"] = {{"mode", m.tangent.mode() == ClassMode::kChern ? "chern" : "pontryagin"},
                    {"rank", m.tangent.rank()},
                    {"classes", classes}};
  if (!m.is_complex && m.spin) doc["spin"] = *m.spin;
  if (!m.annotations.empty()) doc["annotations"] = m.annotations;
  return doc;
}

CohClass parse_class(const RingPtr& ring, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParse, "empty class expression");

  const auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kParse, "cannot parse class '" + std::string(text) + "': " + why);
  };

  CohClass result(ring);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    Rational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = Rational(-1);
      ++pos;
    } else if (!first) {
      throw fail("terms must be separated by '+' or '-'");
    }
    first = false;

    Rational coeff(1);
    bool have_coeff = false;
    if (pos < s.size() && s[pos] == '(') {
      const auto close = s.find(')', pos);
      if (close == std::string::npos) throw fail("unbalanced parenthesis");
      coeff = Rational::parse(s.substr(pos + 1, close - pos - 1));
      have_coeff = true;
      pos = close + 1;
    } else {
      const std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' || s[pos] == '.')) ++pos;
      if (pos > start) {
        coeff = Rational::parse(s.substr(start, pos - start));
        have_coeff = true;
      }
    }
    if (pos < s.size() && s[pos] == '*') ++pos;

    const std::size_t start = pos;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
    const std::string mono = s.substr(start, pos - start);
    if (mono.empty() && !have_coeff) throw fail("empty term");
    const Exponents e = ring->parse_monomial(mono.empty() ? "1" : mono);
    if (const auto idx = ring->find(e); idx && ring->degree(*idx) <= ring->top_degree()) {
      result += CohClass::monomial(ring, *idx, sign * coeff);
    }
  }
  return result;
}

}  // namespace fracindex
