#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace cbd {

// All probabilities and expectations in this library are exact rationals.
// GMP keeps values canonical (lowest terms, positive denominator).
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "p/q" (q > 0), a plain integer, or a decimal string such as
// "0.25" (converted exactly to 25/100 and canonicalized). Anything else
// raises Error{SyntaxError}.
Rat parse_rational(std::string_view text);

// Lowest terms; "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rat& value);

double to_double(const Rat& value);

// Six-decimal fixed-point rendering for human-readable reports.
std::string format_decimal(const Rat& value);

}  // namespace cbd
