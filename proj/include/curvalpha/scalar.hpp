#pragma once

// Exact scalars. Everything in the core is computed over arbitrary-precision
// rationals; decimal strings are produced only when a value is reported.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curvalpha {

using Integer = mpz_class;
using Scalar = mpq_class;

int sign(const Scalar& x);
int sign(const Integer& x);

/// Parses "p", "p/q", "-1.25", "2.5e-3" exactly. Throws Error(Parse).
Scalar parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_exact_string(const Scalar& x);

/// Correctly rounded (half away from zero) rendering with `digits`
/// significant digits, in the layout of printf's %.*g: fixed notation for
/// decimal exponents in [-4, digits), scientific otherwise, trailing zeros
/// trimmed. Independent of the C locale.
std::string format_decimal(const Scalar& x, int digits = 12);

/// Rational approximation of sqrt(x) for x >= 0 with relative error below
/// 10^-digits (floor of the scaled integer square root).
Scalar sqrt_approx(const Scalar& x, int digits);

/// 10^e as an exact rational, e may be negative.
Scalar pow10(int e);

double to_double(const Scalar& x);

}  // namespace curvalpha
