#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace w1g {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q"; throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace w1g
