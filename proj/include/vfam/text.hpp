#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "vfam/polynomial.hpp"

namespace vfam {

// Text form of polynomials: terms `c*x1^e1*...*xn^en` joined by `+`/`-`,
// rational coefficients written `p/q`, parameters named k1..km. Parentheses
// and `^` with integer exponents are accepted anywhere; negative exponents
// are allowed on x variables only (`x1^-1` or `x1^(-1)`).

/// Throws Error(kParse) on malformed text or out-of-range variable indices.
ParametrisedPolynomial parse_parametrised(std::string_view text,
                                          std::size_t n_vars,
                                          std::size_t n_params);

/// Parses a polynomial with constant coefficients (no k variables).
LaurentPolynomial parse_laurent(std::string_view text, std::size_t n_vars);

std::string render(const LaurentPolynomial& p);
std::string render(const ParameterPolynomial& p);
std::string render(const ParametrisedPolynomial& p);

/// System files hold one polynomial per line. Blank lines and lines
/// starting with '#' are skipped; an optional `vars=N` line fixes the
/// ambient variable count (otherwise the largest index seen is used).
PolynomialSystem parse_system(std::string_view text);
std::string render_system(const PolynomialSystem& system);

}  // namespace vfam
