#include "khintchine/exact_rational.hpp"

#include <stdexcept>

namespace khintchine {

ExactRational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

ExactRational pow_rational(const ExactRational& base, unsigned long e) {
  // gcd(num, den) == 1 is preserved by powering, so no re-canonicalization.
  ExactRational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return r;
}

std::string to_string(const ExactRational& v) { return v.get_str(); }

}  // namespace khintchine
