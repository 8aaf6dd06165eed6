#pragma once

#include <gmpxx.h>

namespace khintchine {

// Arbitrary-precision count.  Every counting routine returns one of these;
// C(2p+N-1, 2p) and 2^N overflow fixed-width integers almost immediately.
using BigCount = mpz_class;

// Binomial coefficient under the counting convention used throughout:
//   C(n, 0) = 1 for every integer n, including n < 0;
//   C(n, k) = 0 when k > 0 and either n < 0 or n < k.
// The n < 0 row matters: the summands of the parity-tally closed form
// collapse to the right single term in the degenerate cases only because
// C(-1, 0) = 1 while C(-1, k) = 0 for k > 0.
// Results for n <= 4096 are memoized per thread.
BigCount binomial(long n, long k);

// n!
BigCount factorial(unsigned long n);

// Number of weak compositions of s into `parts` non-negative parts:
// C(s + parts - 1, s).  Exactly one empty composition when s == parts == 0.
BigCount weak_composition_count(unsigned long s, unsigned long parts);

}  // namespace khintchine
