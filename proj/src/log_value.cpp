#include "khintchine/log_value.hpp"

#include <cmath>
#include <stdexcept>

namespace khintchine {
namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kHalfLn2Pi = 0.91893853320467274178;  // ln(2*pi)/2

}  // namespace

double LogValue::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(ln_magnitude);
}

int compare(const LogValue& a, const LogValue& b) {
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  if (a.sign == 0) return 0;
  if (a.ln_magnitude == b.ln_magnitude) return 0;
  const bool mag_less = a.ln_magnitude < b.ln_magnitude;
  return mag_less == (a.sign > 0) ? -1 : 1;
}

LogValue operator*(const LogValue& a, const LogValue& b) {
  if (a.sign == 0 || b.sign == 0) return LogValue::zero();
  return {a.sign * b.sign, a.ln_magnitude + b.ln_magnitude};
}

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: requires x > 0");
  // Lanczos, g = 7, nine coefficients.
  static constexpr double kCoeff[9] = {
      0.99999999999980993,
      676.5203681218851,
      -1259.1392167224028,
      771.32342877765313,
      -176.61502916214059,
      12.507343278686905,
      -0.13857109526572012,
      9.9843695780195716e-6,
      1.5056327351493116e-7,
  };
  double series = kCoeff[0];
  for (int i = 1; i < 9; ++i) series += kCoeff[i] / (x - 1.0 + i);
  const double t = x + 6.5;  // x - 0.5 + g
  return kHalfLn2Pi + (x - 0.5) * std::log(t) - t + std::log(series);
}

LogValue exact_to_log(const ExactRational& v) {
  const int s = sgn(v);
  if (s == 0) return LogValue::zero();
  // d * 2^e decompositions of numerator and denominator; |d| in [0.5, 1).
  long en = 0;
  long ed = 0;
  const double dn = mpz_get_d_2exp(&en, mpq_numref(v.get_mpq_t()));
  const double dd = mpz_get_d_2exp(&ed, mpq_denref(v.get_mpq_t()));
  const double ln = std::log(std::fabs(dn)) - std::log(dd) +
                    (static_cast<double>(en) - static_cast<double>(ed)) * kLn2;
  return {s, ln};
}

}  // namespace khintchine
