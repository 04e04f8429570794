#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ronco {

/// Exact rational scalar. GMP keeps values canonical: gcd(|p|, q) = 1 and q > 0.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical string form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-'); rejects zero denominators and
/// anything that is not a plain integer pair. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

}  // namespace ronco
