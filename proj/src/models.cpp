#include "vfam/models.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "vfam/error.hpp"
#include "vfam/rng.hpp"
#include "vfam/text.hpp"

namespace vfam {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& msg) {
  throw Error(ErrorCode::kSchema, msg);
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

std::string get_string(const json& v, const char* key) {
  if (!v.is_string()) schema_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t get_count(const json& v, const char* key) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    schema_error(std::string("'") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

IntMatrix get_matrix(const json& v, const char* key,
                     std::optional<std::size_t> rows) {
  if (!v.is_array()) schema_error(std::string("'") + key + "' must be an array of rows");
  IntMatrix m;
  for (const auto& row : v) {
    if (!row.is_array()) schema_error(std::string("'") + key + "' rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        schema_error(std::string("'") + key + "' entries must be integers");
      }
      r.push_back(x.get<std::int64_t>());
    }
    if (!m.empty() && r.size() != m.front().size()) {
      schema_error(std::string("'") + key + "' is not rectangular");
    }
    m.push_back(std::move(r));
  }
  if (rows && m.size() != *rows) {
    schema_error(std::string("'") + key + "' has " + std::to_string(m.size()) +
                 " rows, expected " + std::to_string(*rows));
  }
  return m;
}

std::vector<ParametrisedPolynomial> get_polys(const json& v, const char* key,
                                              std::size_t n, std::size_t m) {
  if (!v.is_array()) schema_error(std::string("'") + key + "' must be an array");
  std::vector<ParametrisedPolynomial> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      schema_error(std::string("'") + key + "' entries must be strings");
    }
    try {
      out.push_back(parse_parametrised(v[i].get<std::string>(), n, m));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(key) + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

// Row echelon pivots by exact elimination with leftmost-nonzero pivoting.
std::vector<std::size_t> echelon_pivots(std::vector<std::vector<Rational>> a,
                                        std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[row][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

}  // namespace

ODEModel parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("model document must be a JSON object");

  static const std::set<std::string> kKnown = {
      "id", "description", "n_species", "n_params", "odes", "constraints",
      "stoichiometric_matrix", "reconfigured_stoichiometric_matrix",
      "kinetic_matrix", "deficiency", "param_values"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKnown.count(key)) schema_error("unknown field '" + key + "'");
  }

  ODEModel m;
  m.id = get_string(require(doc, "id"), "id");
  m.description = get_string(require(doc, "description"), "description");
  m.n_species = get_count(require(doc, "n_species"), "n_species");
  m.n_params = get_count(require(doc, "n_params"), "n_params");
  m.odes = get_polys(require(doc, "odes"), "odes", m.n_species, m.n_params);
  if (m.odes.size() != m.n_species) {
    schema_error("'odes' has " + std::to_string(m.odes.size()) +
                 " entries, expected one per species (" +
                 std::to_string(m.n_species) + ")");
  }
  m.constraints = get_polys(require(doc, "constraints"), "constraints",
                            m.n_species, m.n_params);
  for (std::size_t i = 0; i < m.constraints.size(); ++i) {
    if (!m.constraints[i].is_affine_linear()) {
      schema_error("constraints[" + std::to_string(i) +
                   "] is not affine-linear in the species");
    }
  }
  m.stoichiometric_matrix = get_matrix(require(doc, "stoichiometric_matrix"),
                                       "stoichiometric_matrix", m.n_species);
  if (auto it = doc.find("reconfigured_stoichiometric_matrix"); it != doc.end()) {
    m.reconfigured_stoichiometric_matrix =
        get_matrix(*it, "reconfigured_stoichiometric_matrix", m.n_species);
  }
  if (auto it = doc.find("kinetic_matrix"); it != doc.end()) {
    m.kinetic_matrix = get_matrix(*it, "kinetic_matrix", std::nullopt);
  }
  if (auto it = doc.find("deficiency"); it != doc.end()) {
    if (!it->is_number_integer()) schema_error("'deficiency' must be an integer");
    m.deficiency = it->get<std::int64_t>();
  }
  if (auto it = doc.find("param_values"); it != doc.end()) {
    if (!it->is_array()) schema_error("'param_values' must be an array");
    std::vector<Rational> values;
    for (const auto& v : *it) {
      if (v.is_string()) {
        values.push_back(parse_rational(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        values.push_back(parse_rational(std::to_string(v.get<std::int64_t>())));
      } else {
        schema_error("'param_values' entries must be rational strings");
      }
    }
    if (values.size() != m.n_params) {
      schema_error("'param_values' has " + std::to_string(values.size()) +
                   " entries, expected " + std::to_string(m.n_params));
    }
    m.param_values = std::move(values);
  }
  return m;
}

ODEModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string render_model(const ODEModel& model) {
  ordered_json doc;
  doc["id"] = model.id;
  doc["description"] = model.description;
  doc["n_species"] = model.n_species;
  doc["n_params"] = model.n_params;
  doc["odes"] = ordered_json::array();
  for (const auto& p : model.odes) doc["odes"].push_back(render(p));
  doc["constraints"] = ordered_json::array();
  for (const auto& p : model.constraints) doc["constraints"].push_back(render(p));
  doc["stoichiometric_matrix"] = matrix_json(model.stoichiometric_matrix);
  if (model.reconfigured_stoichiometric_matrix) {
    doc["reconfigured_stoichiometric_matrix"] =
        matrix_json(*model.reconfigured_stoichiometric_matrix);
  }
  if (model.kinetic_matrix) doc["kinetic_matrix"] = matrix_json(*model.kinetic_matrix);
  if (model.deficiency) doc["deficiency"] = *model.deficiency;
  if (model.param_values) {
    doc["param_values"] = ordered_json::array();
    for (const auto& q : *model.param_values) doc["param_values"].push_back(to_string(q));
  }
  return doc.dump(2) + "\n";
}

std::vector<Rational> random_parameters(std::size_t count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Rational> params;
  params.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // 255 nonzero values of an 8-bit signed integer.
    const auto v = static_cast<long>(rng.below(255));
    params.emplace_back(v < 128 ? v - 128 : v - 127);
  }
  return params;
}

std::vector<std::vector<Rational>> constraint_matrix(
    const ODEModel& model, std::span<const Rational> params) {
  std::vector<std::vector<Rational>> a;
  a.reserve(model.constraints.size());
  for (const auto& c : model.constraints) {
    std::vector<Rational> row;
    row.reserve(model.n_species);
    for (std::size_t j = 0; j < model.n_species; ++j) {
      row.push_back(c.coefficient(ExponentVector::unit(model.n_species, j)).evaluate(params));
    }
    a.push_back(std::move(row));
  }
  return a;
}

std::vector<std::size_t> constraint_pivots(const ODEModel& model,
                                           std::span<const Rational> params) {
  return echelon_pivots(constraint_matrix(model, params), model.n_species);
}

std::vector<std::size_t> constraint_pivots(const ODEModel& model) {
  // Division-free elimination over Q[k1..km].
  const std::size_t n = model.n_species;
  std::vector<std::vector<ParameterPolynomial>> a;
  for (const auto& c : model.constraints) {
    std::vector<ParameterPolynomial> row;
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(c.coefficient(ExponentVector::unit(n, j)));
    }
    a.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      const ParameterPolynomial lead = a[row][c], factor = a[i][c];
      for (std::size_t j = c; j < n; ++j) {
        a[i][j] = lead * a[i][j] - factor * a[row][j];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

PolynomialSystem specialise_model(const ODEModel& model,
                                  std::span<const Rational> params,
                                  const SpecialisationOptions& opts) {
  std::vector<bool> omitted(model.n_species, false);
  if (opts.reduce) {
    for (std::size_t p : constraint_pivots(model, params)) omitted[p] = true;
  }
  std::vector<LaurentPolynomial> polys;
  for (std::size_t i = 0; i < model.n_species; ++i) {
    if (omitted[i]) continue;
    LaurentPolynomial p = specialise(model.odes[i], params);
    if (p.is_zero()) {
      throw Error(ErrorCode::kDegenerate,
                  model.id + ": ODE of x" + std::to_string(i + 1) +
                      " vanishes at the chosen parameters");
    }
    polys.push_back(std::move(p));
  }
  if (opts.constraint) {
    for (std::size_t i = 0; i < model.constraints.size(); ++i) {
      LaurentPolynomial p = specialise(model.constraints[i], params);
      if (p.is_zero()) {
        throw Error(ErrorCode::kDegenerate,
                    model.id + ": constraint " + std::to_string(i + 1) +
                        " vanishes at the chosen parameters");
      }
      polys.push_back(std::move(p));
    }
  }
  return PolynomialSystem(model.n_species, std::move(polys));
}

PolynomialSystem random_specialisation(const ODEModel& model,
                                       const SpecialisationOptions& opts) {
  const std::uint64_t seed =
      opts.seed ? *opts.seed
                : (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^
                      std::random_device{}();
  return specialise_model(model, random_parameters(model.n_params, seed), opts);
}

PolynomialSystem fixed_specialisation(const ODEModel& model,
                                      const SpecialisationOptions& opts) {
  if (!model.param_values) {
    throw Error(ErrorCode::kInvalidArgument,
                model.id + " has no stored parameter values");
  }
  return specialise_model(model, *model.param_values, opts);
}

bool is_toric_candidate(const PolynomialSystem& system) {
  for (const auto& p : system) {
    if (p.term_count() < 2) return false;
  }
  return true;
}

}  // namespace vfam
