#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "khintchine/formulas.hpp"
#include "khintchine/oracle.hpp"

using namespace khintchine;
using oracle::CapExceeded;

TEST_CASE("sign vector enumeration") {
  std::vector<std::vector<int>> seen;
  const BigCount count = oracle::enumerate_sign_vectors(
      4, 2, [&](std::span<const int> v) { seen.emplace_back(v.begin(), v.end()); });
  CHECK(count == 4);
  CHECK(seen.size() == 4);
  for (const auto& v : seen) {
    CHECK(std::accumulate(v.begin(), v.end(), 0) == 2);
    for (int e : v) CHECK((e == 1 || e == -1));
  }
  CHECK(std::set<std::vector<int>>(seen.begin(), seen.end()).size() == 4);
}

TEST_CASE("sign vector enumeration handles negative and degenerate sums") {
  long visits = 0;
  CHECK(oracle::enumerate_sign_vectors(4, -2, [&](std::span<const int> v) {
          ++visits;
          CHECK(std::accumulate(v.begin(), v.end(), 0) == -2);
        }) == 4);
  CHECK(visits == 4);
  // Parity mismatch: the event is empty, not an error.
  CHECK(oracle::enumerate_sign_vectors(4, 1, [&](std::span<const int>) { ++visits; }) == 0);
  CHECK(oracle::enumerate_sign_vectors(2, 6, [&](std::span<const int>) { ++visits; }) == 0);
  CHECK(visits == 4);
  // Single-vector events.
  CHECK(oracle::enumerate_sign_vectors(3, 3, [](std::span<const int>) {}) == 1);
  CHECK(oracle::enumerate_sign_vectors(3, -3, [](std::span<const int>) {}) == 1);
}

TEST_CASE("sign vector counts match the conditioning probability for n <= 12") {
  for (long n = 1; n <= 12; ++n)
    for (long m = -n; m <= n; ++m) {
      const BigCount count =
          oracle::enumerate_sign_vectors(n, m, [](std::span<const int>) {});
      mpz_class two_n;
      mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
      CHECK(make_rational(count, two_n) == prob_sum_equals(n, m));
    }
}

TEST_CASE("enumeration refuses above the cap") {
  try {
    oracle::enumerate_sign_vectors(24, 0, [](std::span<const int>) {}, BigCount(1000));
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.count() == binomial(24, 12));
    CHECK(e.cap() == 1000);
  }
}

TEST_CASE("weak composition enumeration") {
  std::vector<std::vector<long>> seen;
  oracle::for_each_weak_composition(
      2, 2, [&](std::span<const long> c) { seen.emplace_back(c.begin(), c.end()); });
  CHECK(seen == std::vector<std::vector<long>>{{2, 0}, {1, 1}, {0, 2}});

  long empties = 0;
  oracle::for_each_weak_composition(0, 0, [&](std::span<const long> c) {
    ++empties;
    CHECK(c.empty());
  });
  CHECK(empties == 1);
}

TEST_CASE("weak composition enumeration matches the count formula") {
  for (long s = 0; s <= 8; ++s)
    for (long parts = 0; parts <= 6; ++parts) {
      std::set<std::vector<long>> all;
      long visits = 0;
      oracle::for_each_weak_composition(s, parts, [&](std::span<const long> c) {
        ++visits;
        CHECK(std::accumulate(c.begin(), c.end(), 0L) == s);
        all.emplace(c.begin(), c.end());
      });
      CHECK(weak_composition_count(s, parts) == visits);
      CHECK(static_cast<long>(all.size()) == visits);  // no duplicates
    }
}

TEST_CASE("conditional moment by enumeration") {
  const Parameters params(2, 0, 1);
  CHECK(oracle::conditional_moment({1, 0}, params) == 1);
  CHECK(oracle::conditional_moment({1, 1}, params) == 0);
  CHECK(oracle::conditional_moment({1, -1}, params) == 4);
  CHECK(oracle::conditional_moment({ExactRational(1, 2), ExactRational(1, 3)}, params) ==
        ExactRational(1, 36));
  CHECK_THROWS_AS(oracle::conditional_moment({1, 0, 0}, params), std::invalid_argument);
}

TEST_CASE("all-ones moment is m^2p") {
  for (long n = 1; n <= 8; ++n)
    for (long m = -n; m <= n; m += 2)
      for (long p = 1; p <= 3; ++p) {
        if ((n - m) % 2 != 0) continue;
        const ExactRational got = oracle::conditional_moment(
            oracle::CoefficientVector(n, ExactRational(1)), Parameters(n, m, p));
        CHECK(got == pow_rational(ExactRational(m), 2 * p));
      }
}

TEST_CASE("product expectation pinned values") {
  {
    const std::vector<long> e{1, 1};
    CHECK(oracle::product_expectation(e, 2, 0) == -1);
  }
  {
    const std::vector<long> e{2, 0};
    CHECK(oracle::product_expectation(e, 2, 0) == 1);
  }
  {
    const std::vector<long> e{1, 1, 1, 1};
    CHECK(oracle::product_expectation(e, 4, 0) == 1);
  }
  {
    const std::vector<long> e{1, 1, 0};
    CHECK_THROWS_AS(oracle::product_expectation(e, 3, 0), std::domain_error);  // null event
    const std::vector<long> odd{1, 2, 0};
    CHECK_THROWS_AS(oracle::product_expectation(odd, 3, 1), std::invalid_argument);
    const std::vector<long> neg{2, -2, 2};
    CHECK_THROWS_AS(oracle::product_expectation(neg, 3, 1), std::invalid_argument);
  }
}

TEST_CASE("product expectation depends only on the odd-exponent positions") {
  // Signs square to one, so bumping any exponent by 2 must not change the
  // value, a lumped exponent vector (2p, 0, ..., 0) is always 1, and the
  // +m / -m events give identical values (total exponent is even).
  for (long n = 2; n <= 6; ++n)
    for (long m = n % 2; m <= n; m += 2)
      for (long p = 1; p <= 2; ++p) {
        std::vector<long> lumped(n, 0);
        lumped[0] = 2 * p;
        CHECK(oracle::product_expectation(lumped, n, m) == 1);

        std::vector<long> spread(n, 0);
        for (long i = 0; i < 2 * p; ++i) spread[i % n] += 1;
        const ExactRational base = oracle::product_expectation(spread, n, m);
        CHECK(base >= -1);
        CHECK(base <= 1);
        if (m != 0) CHECK(oracle::product_expectation(spread, n, -m) == base);
        for (long i = 0; i < n; ++i) {
          std::vector<long> bumped = spread;
          bumped[i] += 2;
          CHECK(oracle::product_expectation(bumped, n, m) == base);
        }
      }
}

TEST_CASE("composition-averaged product expectation matches the closed form") {
  // Two nested enumerations against one formula: average the enumerated
  // per-composition expectation over every weak composition of 2p, then undo
  // the conditioning probability.
  for (long n = 2; n <= 6; ++n)
    for (long m = n % 2; m <= n; m += 2)
      for (long p = 1; p <= 2; ++p) {
        const Parameters params(n, m, p);
        ExactRational sum = 0;
        oracle::for_each_weak_composition(
            2 * p, n, [&](std::span<const long> c) {
              sum += oracle::product_expectation(c, n, m);
            });
        const ExactRational avg =
            sum / ExactRational(weak_composition_count(2 * p, n));
        CHECK(avg / prob_sum_equals(n, m) == expectation_product(params));
      }
}

TEST_CASE("composition tallies at pinned points") {
  const oracle::CompositionTally a = oracle::tally_compositions(Parameters(2, 0, 1));
  CHECK(a.t_even == 2);
  CHECK(a.t_odd == 1);
  CHECK(a.total == 3);
  const oracle::CompositionTally b = oracle::tally_compositions(Parameters(2, 2, 1));
  CHECK(b.t_even == 3);
  CHECK(b.t_odd == 0);
  CHECK(b.total == 3);
  const oracle::CompositionTally c = oracle::tally_compositions(Parameters(4, 0, 1));
  CHECK(c.t_even == 6);
  CHECK(c.t_odd == 4);
  CHECK(c.total == 10);
}

TEST_CASE("tally difference equals the closed form") {
  for (long n = 1; n <= 8; ++n)
    for (long m = n % 2; m <= n; m += 2)
      for (long p = 1; p <= 3; ++p) {
        const Parameters params(n, m, p);
        const oracle::CompositionTally t = oracle::tally_compositions(params);
        CHECK(t.t_even - t.t_odd == t_e_minus_t_o(params));
        CHECK(t.t_even + t.t_odd == t.total);
        CHECK(t.total == weak_composition_count(2 * p, n));
      }
}

TEST_CASE("tally cap") {
  try {
    oracle::tally_compositions(Parameters(40, 0, 4));  // C(47,8) = 314457495 visits
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.count() == binomial(47, 8));
    CHECK(e.cap() == oracle::kEnumerationCap);
  }
}

TEST_CASE("probe corner family at (2, 0, 1)") {
  const oracle::ProbeReport r =
      oracle::inequality_probe(Parameters(2, 0, 1), oracle::ProbeStrategy{0, 0});
  REQUIRE(r.records.size() == 5);
  CHECK(r.records[0].label == "e1");
  CHECK(r.records[1].label == "e2");
  CHECK(r.records[2].label == "ones");
  CHECK(r.records[3].label == "alternating");
  CHECK(r.records[4].label == "contrast");
  CHECK(r.records[0].ratio == ExactRational(3, 4));
  CHECK(r.records[1].ratio == ExactRational(3, 4));
  CHECK(r.records[2].ratio == 0);
  // (1, -1) sees the moment 4 against the bound (4/3)*2.
  CHECK(r.records[3].ratio == ExactRational(3, 2));
  CHECK(r.records[4].ratio == ExactRational(3, 2));
  CHECK(r.max_ratio == ExactRational(3, 2));
  CHECK(r.argmax == 3);  // first vector attaining the max
  CHECK(r.violation_count == 2);
}

TEST_CASE("probe at the full sum never exceeds the bound") {
  const oracle::ProbeReport r =
      oracle::inequality_probe(Parameters(2, 2, 1), oracle::ProbeStrategy{0, 0});
  for (const auto& rec : r.records) CHECK(rec.ratio <= 1);
  CHECK(r.violation_count == 0);
  // ones at (2, 2, 1): moment 4 against bound 8*2.
  CHECK(r.records[2].label == "ones");
  CHECK(r.records[2].ratio == ExactRational(1, 4));
}

TEST_CASE("probe randoms are reproducible and bounded") {
  const Parameters params(4, 2, 2);
  const oracle::ProbeReport a =
      oracle::inequality_probe(params, oracle::ProbeStrategy{5, 42});
  const oracle::ProbeReport b =
      oracle::inequality_probe(params, oracle::ProbeStrategy{5, 42});
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].label == b.records[i].label);
    CHECK(a.records[i].coefficients == b.records[i].coefficients);
    CHECK(a.records[i].ratio == b.records[i].ratio);
  }
  // corners: e1..e4, ones, alternating, contrast; then 5 randoms
  REQUIRE(a.records.size() == 12);
  for (std::size_t i = 7; i < 12; ++i) {
    bool any_nonzero = false;
    for (const auto& c : a.records[i].coefficients) {
      CHECK(abs(c) <= 1);
      CHECK(c.get_den() <= 64);
      if (c != 0) any_nonzero = true;
    }
    CHECK(any_nonzero);
  }

  const oracle::ProbeReport c =
      oracle::inequality_probe(params, oracle::ProbeStrategy{5, 43});
  bool differs = false;
  for (std::size_t i = 7; i < 12; ++i)
    if (c.records[i].coefficients != a.records[i].coefficients) differs = true;
  CHECK(differs);
}

TEST_CASE("probe bookkeeping: bound and ratio columns are consistent") {
  const Parameters params(4, 0, 2);
  const oracle::ProbeReport r =
      oracle::inequality_probe(params, oracle::ProbeStrategy{0, 0});
  const ExactRational c2p = best_constant_2p_power(params);
  for (const auto& rec : r.records) {
    ExactRational norm2 = 0;
    for (const auto& a : rec.coefficients) norm2 += a * a;
    CHECK(rec.bound == c2p * pow_rational(norm2, 2));
    if (rec.bound != 0) CHECK(rec.ratio == rec.moment / rec.bound);
  }
}
