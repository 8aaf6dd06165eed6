#pragma once

#include "khintchine/combinatorics.hpp"
#include "khintchine/exact_rational.hpp"
#include "khintchine/log_value.hpp"
#include "khintchine/parameters.hpp"

namespace khintchine {

// T_E - T_O: among the weak compositions of 2p into N parts, the count whose
// first (N - |M|)/2 parts sum to an even number minus the count where that
// sum is odd.  Closed form:
//   sum_{m=0}^{p} C(p - m + ell - 1, p - m) * C(2m + |M| - 1, 2m),
// with ell = (N - |M|)/2.  The binomial conventions make the degenerate
// cases collapse correctly: |M| = N keeps only the m = p term, M = 0 keeps
// only m = 0.
BigCount t_e_minus_t_o(const Parameters& params);

// (T_E - T_O) / (T_E + T_O), where T_E + T_O = C(2p + N - 1, 2p) counts all
// weak compositions.  Always in [0, 1].
ExactRational p_dif(const Parameters& params);

// P(sum of N independent signs == M) = C(N, (N + M)/2) / 2^N.
// Exactly 0 when N - M is odd or |M| > N (the event is empty).
ExactRational prob_sum_equals(long n, long m);

// E[prod_i eps_i^{p_i} | sum = M] for any exponent vector with
// sum_i p_i = 2p.  The value depends only on (N, M, p):
//   2^N * (T_E - T_O) / (C(N, (N + M)/2) * C(2p + N - 1, 2p)).
ExactRational expectation_product(const Parameters& params);

// The 2p-th power of the best constant: N^p * expectation_product.
ExactRational best_constant_2p_power(const Parameters& params);

// The best constant itself, exp(ln(best_constant_2p_power) / (2p)),
// kept in log space since the 2p-th root is irrational.
LogValue best_constant(const Parameters& params);

// Balanced case M = 0 as a standalone closed form (N even >= 2):
//   (N/2)^{p+1} * (N/2 - 1)! * 4^{p + N/2} * (p + N/2)! / (2p + N)!
//     * (2p)! / (2^p * p!),
// which is the half-integer-Gamma evaluation of the general formula and so
// stays rational.  Must equal best_constant_2p_power at M = 0.
ExactRational balanced_closed_form(long n, long p);

// Full-sum case M = N: the constant's 2p-th power is exactly 2^N * N^p.
ExactRational full_sum_case(long n, long p);

}  // namespace khintchine
