#ifndef TOURPATHS_NUMERIC_HPP
#define TOURPATHS_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tourpaths {

using BigInt = mpz_class;
using Rational = mpq_class;

// Malformed or invariant-violating input: bad matrices, bad files, bad
// generator arguments, bad optimizer parameters.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested computation exceeds a hard feasibility limit (subset DP
// vertex ceiling, census size guard).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decimal string of an integer.
std::string to_string(const BigInt& value);

// Canonical lowest-terms form "p/q" with q > 0, or "p" when q = 1.
std::string to_string(const Rational& value);

// Shortest lossless text for a double: 17 significant digits.
std::string format_double(double value);

// Accepts "p/q", integers and decimals with an optional exponent
// ("0.25", "-3", "1e-3"). The decimal is converted exactly.
Rational parse_rational(std::string_view text);

BigInt power(const BigInt& base, unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// Exact conversion from a 128-bit unsigned accumulator.
BigInt from_u128(unsigned __int128 value);

}  // namespace tourpaths

#endif  // TOURPATHS_NUMERIC_HPP
