#include "khintchine/formulas.hpp"

#include <stdexcept>
#include <string>

namespace khintchine {
namespace {

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class two_pow(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

BigCount t_e_minus_t_o(const Parameters& params) {
  const long ell = params.ell();
  const long am = params.abs_m();
  const long p = params.p();
  BigCount sum = 0;
  for (long j = 0; j <= p; ++j)
    sum += binomial(p - j + ell - 1, p - j) * binomial(2 * j + am - 1, 2 * j);
  return sum;
}

ExactRational p_dif(const Parameters& params) {
  const BigCount total = binomial(2 * params.p() + params.n() - 1, 2 * params.p());
  return make_rational(t_e_minus_t_o(params), total);
}

ExactRational prob_sum_equals(long n, long m) {
  if (n < 1) throw std::invalid_argument("prob_sum_equals: n must be >= 1");
  const long am = m < 0 ? -m : m;
  if (am > n || (n - am) % 2 != 0) return 0;  // empty event
  return make_rational(binomial(n, (n + am) / 2), two_pow(n));
}

ExactRational expectation_product(const Parameters& params) {
  const long n = params.n();
  const long p = params.p();
  const BigCount num = two_pow(n) * t_e_minus_t_o(params);
  const BigCount den =
      binomial(n, (n + params.abs_m()) / 2) * binomial(2 * p + n - 1, 2 * p);
  return make_rational(num, den);
}

ExactRational best_constant_2p_power(const Parameters& params) {
  return ExactRational(pow_z(params.n(), params.p())) * expectation_product(params);
}

LogValue best_constant(const Parameters& params) {
  const LogValue lv = exact_to_log(best_constant_2p_power(params));
  // The parity tally is strictly positive for every valid (n, m, p), so the
  // 2p-th root is real.
  return LogValue::positive(lv.ln_magnitude / (2.0 * params.p()));
}

ExactRational balanced_closed_form(long n, long p) {
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("balanced_closed_form: n must be even and >= 2 (got " +
                            std::to_string(n) + ")");
  if (p < 1) throw std::invalid_argument("balanced_closed_form: p must be >= 1");
  const long h = n / 2;
  const BigCount num = pow_z(h, p + 1) * factorial(h - 1) * pow_z(4, p + h) *
                       factorial(p + h) * factorial(2 * p);
  const BigCount den = factorial(2 * p + n) * two_pow(p) * factorial(p);
  return make_rational(num, den);
}

ExactRational full_sum_case(long n, long p) {
  if (n < 1) throw std::invalid_argument("full_sum_case: n must be >= 1");
  if (p < 1) throw std::invalid_argument("full_sum_case: p must be >= 1");
  return ExactRational(two_pow(n) * pow_z(n, p));
}

}  // namespace khintchine
