#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "opsf/error.hpp"

namespace opsf {

// Exact arbitrary-precision rational, canonical form maintained by GMP
// (gcd(|num|,den)=1, den>0).
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p/q" or "p" (ASCII base 10). Throws ParseError on malformed input
// or zero denominator.
Rational parse_rational(const std::string& text);

// Prints "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// True iff r is an integer <= 0.
bool is_nonpositive_integer(const Rational& r);

// Requires an integer value fitting in long.
long to_long(const Rational& r);

// base^e for integer e; e < 0 requires base != 0.
Rational rational_pow(const Rational& base, long e);

Rational checked_div(const Rational& num, const Rational& den, ErrorKind kind,
                     const std::string& context);

Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long k);

std::vector<Rational> parse_rational_list(const std::string& csv);

}  // namespace opsf
