#pragma once

#include "khintchine/exact_rational.hpp"

namespace khintchine {

// Sign plus natural log of magnitude.  Quantities like 2^N * N^p leave
// double range around N = 700; this representation does not.
struct LogValue {
  int sign = 0;               // -1, 0, +1
  double ln_magnitude = 0.0;  // ignored when sign == 0

  static LogValue zero() { return {0, 0.0}; }
  static LogValue positive(double ln) { return {+1, ln}; }

  // sign * exp(ln_magnitude); overflows to +-inf past ~709.
  double to_double() const;
};

// -1 / 0 / +1 as a < b, a == b, a > b.  Zero ln_magnitudes compare equal
// regardless of the stored double.
int compare(const LogValue& a, const LogValue& b);

inline bool operator==(const LogValue& a, const LogValue& b) { return compare(a, b) == 0; }
inline bool operator!=(const LogValue& a, const LogValue& b) { return compare(a, b) != 0; }
inline bool operator<(const LogValue& a, const LogValue& b) { return compare(a, b) < 0; }
inline bool operator<=(const LogValue& a, const LogValue& b) { return compare(a, b) <= 0; }
inline bool operator>(const LogValue& a, const LogValue& b) { return compare(a, b) > 0; }
inline bool operator>=(const LogValue& a, const LogValue& b) { return compare(a, b) >= 0; }

// Signs multiply, ln-magnitudes add.
LogValue operator*(const LogValue& a, const LogValue& b);

// ln Gamma(x) for x > 0.  Lanczos approximation with g = 7 and the familiar
// nine-coefficient set; relative accuracy in ln-space is far below the 1e-12
// the callers need.  x <= 0 (or NaN) throws std::domain_error.
double log_gamma(double x);

// Exact rational -> LogValue without ever forming a huge double: numerator
// and denominator are split into mantissa and binary exponent separately,
// so only the exponents carry the size.
LogValue exact_to_log(const ExactRational& v);

}  // namespace khintchine
