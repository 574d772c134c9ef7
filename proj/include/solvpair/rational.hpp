#pragma once

#include <gmpxx.h>

#include <string>

namespace solvpair {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" with optional sign, arbitrary precision.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_to_string(const Rat& value);

/// Exact integer power; a negative exponent requires base != 0.
Rat rat_pow(const Rat& base, long exp);

/// num/den in lowest terms; throws std::invalid_argument if den == 0.
Rat make_rat(long num, long den);

}  // namespace solvpair
