#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vfam {

/// Exact arbitrary-precision rational; all coefficient arithmetic uses it.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical form "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws Error(kParse) on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Binomial coefficient C(n, k) as an exact integer; 0 when k > n.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace vfam
