#pragma once

#include <gmpxx.h>

#include <string>

namespace jackd {

using Int = mpz_class;
using Rat = mpq_class;

Int factorial(int n);
Int binomial(int n, int k);

// (2m-1)!! for m >= 0; the empty product (m = 0) is 1.
Int odd_double_factorial(int m);

Int pow_int(const Int& base, int exp);

// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
// on anything else, including a zero denominator.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

// True iff q has denominator 1.
bool is_integer(const Rat& q);

}  // namespace jackd
