#pragma once

#include <string>

#include <gmpxx.h>

namespace khintchine {

// Signed rational, always kept canonical (lowest terms, positive
// denominator).  All exact results are one of these.
using ExactRational = mpq_class;

// num/den, canonicalized.  den must be nonzero.
ExactRational make_rational(const mpz_class& num, const mpz_class& den);

// base^e.  Canonical in, canonical out.
ExactRational pow_rational(const ExactRational& base, unsigned long e);

// Lowest-terms string: "32/15", or "8" when the denominator is 1.
std::string to_string(const ExactRational& v);

}  // namespace khintchine
