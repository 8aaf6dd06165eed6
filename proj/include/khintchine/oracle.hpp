#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "khintchine/combinatorics.hpp"
#include "khintchine/exact_rational.hpp"
#include "khintchine/parameters.hpp"

namespace khintchine::oracle {

// Brute-force enumeration refuses to start above this many visits.
inline const long kEnumerationCap = 10'000'000;

// Thrown before any enumeration whose size exceeds the cap; carries both
// numbers so callers can report them.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string what, BigCount count, BigCount cap)
      : std::runtime_error(std::move(what)),
        count_(std::move(count)),
        cap_(std::move(cap)) {}
  const BigCount& count() const { return count_; }
  const BigCount& cap() const { return cap_; }

 private:
  BigCount count_;
  BigCount cap_;
};

// Visits every +-1 vector of length n whose entries sum to m, in
// lexicographic order of the set of +1 positions.  Returns the number of
// vectors visited: C(n, (n+m)/2), or 0 when n - m is odd or |m| > n
// (no error -- the event is merely empty).  The span passed to the visitor
// is a reused buffer; copy it if it must outlive the call.
BigCount enumerate_sign_vectors(long n, long m,
                                const std::function<void(std::span<const int>)>& visit,
                                const BigCount& cap = BigCount(kEnumerationCap));

// Visits every weak composition of `total` into `parts` non-negative parts,
// in lexicographically decreasing order starting from (total, 0, ..., 0).
// parts == 0 with total == 0 visits the single empty composition.
// The visited span is a reused buffer.
void for_each_weak_composition(long total, long parts,
                               const std::function<void(std::span<const long>)>& visit);

using CoefficientVector = std::vector<ExactRational>;

// E[(sum_i a_i eps_i)^{2p} | sum eps = m] by direct enumeration, exact.
// a.size() must equal n; throws std::domain_error("conditioning on null
// event") when no sign vector attains the sum.
ExactRational conditional_moment(const CoefficientVector& a, const Parameters& params,
                                 const BigCount& cap = BigCount(kEnumerationCap));

// E[prod_i eps_i^{e_i} | sum eps = m] by direct enumeration.  Exponents must
// be non-negative with an even sum >= 2.  Since each sign squares to one,
// the value depends only on which positions carry an odd exponent.
ExactRational product_expectation(std::span<const long> exponents, long n, long m,
                                  const BigCount& cap = BigCount(kEnumerationCap));

struct CompositionTally {
  BigCount t_even;  // compositions whose first ell parts have even sum
  BigCount t_odd;
  BigCount total;   // t_even + t_odd == C(2p + n - 1, 2p)
};

// Classifies every weak composition of 2p into n parts by the parity of the
// sum of its first ell = (n - |m|)/2 parts.
CompositionTally tally_compositions(const Parameters& params,
                                    const BigCount& cap = BigCount(kEnumerationCap));

struct ProbeStrategy {
  unsigned trials = 0;      // random coefficient vectors on top of the corners
  std::uint64_t seed = 0;   // mt19937_64 seed; same seed => same vectors
};

struct ProbeRecord {
  std::string label;
  CoefficientVector coefficients;
  ExactRational moment;  // exact E[(sum a_i eps_i)^{2p} | sum = m]
  ExactRational bound;   // best_constant_2p_power * (sum a_i^2)^p
  ExactRational ratio;   // moment / bound; > 1 would be a violation
};

struct ProbeReport {
  std::vector<ProbeRecord> records;
  ExactRational max_ratio;
  std::size_t argmax = 0;          // first index attaining max_ratio
  std::size_t violation_count = 0;
};

// Probes the moment inequality with exact arithmetic end to end.  The corner
// family comes first -- each standard basis vector e_1..e_n, the all-ones
// vector, the alternating vector (+1, -1, +1, ...), and (1, -1, 0, ..., 0)
// when n >= 2 -- followed by `trials` pseudorandom rational vectors.
//
// Random vectors are generated reproducibly from mt19937_64 raw outputs
// (never std::uniform_*, whose mapping is implementation-defined): for each
// entry draw r1 then r2, set den = 1 + (r1 mod 64) and
// num = (r2 mod (2*den + 1)) - den, giving num/den in [-1, 1].  A vector
// that comes out identically zero is discarded and redrawn in full.
ProbeReport inequality_probe(const Parameters& params, const ProbeStrategy& strategy,
                             const BigCount& cap = BigCount(kEnumerationCap));

}  // namespace khintchine::oracle
