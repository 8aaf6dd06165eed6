#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "khintchine/formulas.hpp"

using namespace khintchine;

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(Parameters(1, 1, 1));
  CHECK_NOTHROW(Parameters(4, -2, 3));
  CHECK_THROWS_AS(Parameters(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Parameters(2, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Parameters(2, -4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Parameters(3, 0, 1), std::invalid_argument);  // parity
  CHECK_THROWS_AS(Parameters(4, 1, 1), std::invalid_argument);  // parity
  CHECK_THROWS_AS(Parameters(2, 0, 0), std::invalid_argument);
}

TEST_CASE("parity tally closed form at pinned points") {
  CHECK(t_e_minus_t_o(Parameters(2, 0, 1)) == 1);
  CHECK(t_e_minus_t_o(Parameters(2, 2, 1)) == 3);
  CHECK(t_e_minus_t_o(Parameters(4, 0, 1)) == 2);
}

TEST_CASE("p_dif pinned values and full-sum degeneracy") {
  CHECK(p_dif(Parameters(2, 0, 1)) == ExactRational(1, 3));
  CHECK(p_dif(Parameters(4, 0, 1)) == ExactRational(1, 5));
  // M = N leaves nothing to cancel: every composition counts as even.
  for (long n = 1; n <= 10; ++n)
    for (long p = 1; p <= 4; ++p)
      CHECK(p_dif(Parameters(n, n, p)) == 1);
}

TEST_CASE("p_dif stays in (0, 1]") {
  for (long n = 1; n <= 12; ++n)
    for (long m = n % 2; m <= n; m += 2)
      for (long p = 1; p <= 4; ++p) {
        const ExactRational v = p_dif(Parameters(n, m, p));
        CHECK(v > 0);
        CHECK(v <= 1);
      }
}

TEST_CASE("conditioning probability") {
  CHECK(prob_sum_equals(2, 0) == ExactRational(1, 2));
  CHECK(prob_sum_equals(2, 2) == ExactRational(1, 4));
  CHECK(prob_sum_equals(3, 1) == ExactRational(3, 8));
  CHECK(prob_sum_equals(4, 0) == ExactRational(3, 8));
  CHECK(prob_sum_equals(3, -1) == prob_sum_equals(3, 1));
  CHECK(prob_sum_equals(3, 0) == 0);  // parity mismatch: empty event
  CHECK(prob_sum_equals(2, 4) == 0);  // unreachable sum
  // Total probability over reachable sums.
  for (long n = 1; n <= 12; ++n) {
    ExactRational total = 0;
    for (long m = -n; m <= n; ++m) total += prob_sum_equals(n, m);
    CHECK(total == 1);
  }
}

TEST_CASE("expectation_product pinned values and degeneracies") {
  CHECK(expectation_product(Parameters(2, 0, 1)) == ExactRational(2, 3));
  CHECK(expectation_product(Parameters(4, 0, 1)) == ExactRational(8, 15));
  // M = N pins every sign to +1, and the normalization contributes the
  // full 2^N.
  for (long n = 1; n <= 12; ++n)
    for (long p = 1; p <= 3; ++p) {
      mpz_class two_n;
      mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
      CHECK(expectation_product(Parameters(n, n, p)) == ExactRational(two_n));
    }
}

TEST_CASE("best constant pinned values") {
  CHECK(best_constant_2p_power(Parameters(4, 0, 1)) == ExactRational(32, 15));
  CHECK(best_constant_2p_power(Parameters(2, 2, 1)) == 8);
  CHECK(best_constant_2p_power(Parameters(4, 2, 1)) == ExactRational(32, 5));
  CHECK(best_constant_2p_power(Parameters(2, 0, 1)) == ExactRational(4, 3));
}

TEST_CASE("sign of m does not matter") {
  for (long n = 1; n <= 10; ++n)
    for (long m = n % 2; m <= n; m += 2)
      for (long p = 1; p <= 3; ++p)
        CHECK(best_constant_2p_power(Parameters(n, -m, p)) ==
              best_constant_2p_power(Parameters(n, m, p)));
}

TEST_CASE("balanced closed form agrees with the general formula") {
  CHECK(balanced_closed_form(2, 1) == ExactRational(4, 3));
  CHECK(balanced_closed_form(4, 1) == ExactRational(32, 15));
  for (long n = 2; n <= 20; n += 2)
    for (long p = 1; p <= 6; ++p)
      CHECK(balanced_closed_form(n, p) == best_constant_2p_power(Parameters(n, 0, p)));
  CHECK_THROWS_AS(balanced_closed_form(5, 1), std::domain_error);
  CHECK_THROWS_AS(balanced_closed_form(0, 1), std::domain_error);
}

TEST_CASE("full-sum closed form agrees with the general formula") {
  for (long n = 1; n <= 20; ++n)
    for (long p = 1; p <= 6; ++p)
      CHECK(full_sum_case(n, p) == best_constant_2p_power(Parameters(n, n, p)));
  CHECK(full_sum_case(2, 1) == 8);
}

TEST_CASE("best_constant is the 2p-th root in log space") {
  const LogValue c = best_constant(Parameters(4, 0, 1));
  CHECK(c.sign == 1);
  CHECK(c.ln_magnitude == doctest::Approx(std::log(32.0 / 15.0) / 2.0).epsilon(1e-13));
  const LogValue c2 = best_constant(Parameters(2, 2, 1));
  CHECK(c2.ln_magnitude == doctest::Approx(std::log(8.0) / 2.0).epsilon(1e-13));
  // Root of the 2p-th power round-trips.
  const LogValue full = exact_to_log(best_constant_2p_power(Parameters(6, 2, 3)));
  const LogValue root = best_constant(Parameters(6, 2, 3));
  CHECK(root.ln_magnitude * 6.0 == doctest::Approx(full.ln_magnitude).epsilon(1e-13));
}
