#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace doxa {

// Exact rational backed by GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Accepts "7", "-3", "3/4", "0.99", ".99", "1." and converts decimals exactly.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "3/4", or "2" for integers.
std::string to_string(const Rational& q);

// Always "p/q", including integers ("2/1"). Used for machine-readable output.
std::string to_fraction_string(const Rational& q);

}  // namespace doxa
