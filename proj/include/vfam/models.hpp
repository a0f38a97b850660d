#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vfam/polynomial.hpp"

namespace vfam {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Reaction-network model with precomputed steady-state polynomials.
/// Variables are species concentrations x1..xn, parameters k1..km.
struct ODEModel {
  std::string id;
  std::string description;
  std::size_t n_species = 0;
  std::size_t n_params = 0;
  std::vector<ParametrisedPolynomial> odes;         // one per species
  std::vector<ParametrisedPolynomial> constraints;  // affine-linear in x
  IntMatrix stoichiometric_matrix;
  std::optional<IntMatrix> reconfigured_stoichiometric_matrix;
  std::optional<IntMatrix> kinetic_matrix;
  std::optional<std::int64_t> deficiency;
  std::optional<std::vector<Rational>> param_values;

  friend bool operator==(const ODEModel&, const ODEModel&) = default;
};

/// Parses and validates a JSON model document. Throws Error(kSchema) for
/// missing, mistyped or unknown fields and dimension mismatches, and
/// Error(kParse) for malformed polynomial strings.
ODEModel parse_model(std::string_view json_text);
ODEModel load_model_file(const std::filesystem::path& path);
/// Inverse of parse_model (canonical polynomial rendering, fixed key order).
std::string render_model(const ODEModel& model);

struct SpecialisationOptions {
  bool constraint = false;
  bool reduce = false;
  std::optional<std::uint64_t> seed;
};

/// Parameters drawn uniformly from the nonzero 8-bit signed integers.
std::vector<Rational> random_parameters(std::size_t count, std::uint64_t seed);

/// Coefficient matrix of the constraints over x1..xn at `params`.
std::vector<std::vector<Rational>> constraint_matrix(
    const ODEModel& model, std::span<const Rational> params);

/// Leftmost-nonzero pivot columns (0-based species indices) of a row
/// echelon form of the constraint matrix specialised at `params`.
std::vector<std::size_t> constraint_pivots(const ODEModel& model,
                                           std::span<const Rational> params);
/// Same, row reducing over the parameter ring (generic pivots).
std::vector<std::size_t> constraint_pivots(const ODEModel& model);

/// ODEs minus pivot species (if reduce), then constraints (if constraint),
/// all specialised at `params`. Throws Error(kDegenerate) if a kept
/// polynomial specialises to zero.
PolynomialSystem specialise_model(const ODEModel& model,
                                  std::span<const Rational> params,
                                  const SpecialisationOptions& opts);

/// Without opts.seed the generator is seeded from std::random_device.
PolynomialSystem random_specialisation(const ODEModel& model,
                                       const SpecialisationOptions& opts);
/// Uses model.param_values; Error(kInvalidArgument) when absent.
PolynomialSystem fixed_specialisation(const ODEModel& model,
                                      const SpecialisationOptions& opts);

/// Every polynomial has at least two terms.
bool is_toric_candidate(const PolynomialSystem& system);

}  // namespace vfam
