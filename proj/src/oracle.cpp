#include "khintchine/oracle.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "khintchine/formulas.hpp"

namespace khintchine::oracle {

BigCount enumerate_sign_vectors(long n, long m,
                                const std::function<void(std::span<const int>)>& visit,
                                const BigCount& cap) {
  if (n < 1) throw std::invalid_argument("enumerate_sign_vectors: n must be >= 1");
  const long am = m < 0 ? -m : m;
  if (am > n || (n - am) % 2 != 0) return 0;  // empty event, not an error

  const long k = (n + m) / 2;  // +1 positions; the signed m handles m < 0
  const BigCount count = binomial(n, k);
  if (count > cap)
    throw CapExceeded("sign-vector enumeration would visit " + count.get_str() +
                          " vectors, above the cap of " + cap.get_str(),
                      count, cap);

  // k-subsets of {0..n-1} in lexicographic order.
  std::vector<long> idx(k);
  for (long i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> sign(n);
  for (;;) {
    std::fill(sign.begin(), sign.end(), -1);
    for (long i : idx) sign[i] = +1;
    visit(std::span<const int>(sign.data(), sign.size()));

    long i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

void for_each_weak_composition(long total, long parts,
                               const std::function<void(std::span<const long>)>& visit) {
  if (total < 0 || parts < 0)
    throw std::invalid_argument("for_each_weak_composition: negative argument");
  if (parts == 0) {
    if (total == 0) visit(std::span<const long>());
    return;
  }
  std::vector<long> c(parts, 0);
  c[0] = total;
  for (;;) {
    visit(std::span<const long>(c.data(), c.size()));
    if (c[parts - 1] == total) break;
    // Rightmost index before the last with something left to move.  All
    // positions after it (except possibly the last) are zero.
    long i = parts - 2;
    while (c[i] == 0) --i;
    const long tail = c[parts - 1];
    --c[i];
    c[i + 1] = tail + 1;
    if (i + 1 != parts - 1) c[parts - 1] = 0;
  }
}

ExactRational conditional_moment(const CoefficientVector& a, const Parameters& params,
                                 const BigCount& cap) {
  if (static_cast<long>(a.size()) != params.n())
    throw std::invalid_argument("conditional_moment: got " + std::to_string(a.size()) +
                                " coefficients for n = " + std::to_string(params.n()));
  const unsigned long p2 = 2 * static_cast<unsigned long>(params.p());
  ExactRational sum = 0;
  const BigCount count = enumerate_sign_vectors(
      params.n(), params.m(),
      [&](std::span<const int> eps) {
        ExactRational dot = 0;
        for (std::size_t i = 0; i < eps.size(); ++i) {
          if (eps[i] > 0)
            dot += a[i];
          else
            dot -= a[i];
        }
        sum += pow_rational(dot, p2);
      },
      cap);
  if (count == 0) throw std::domain_error("conditioning on null event");
  return sum / ExactRational(count);
}

ExactRational product_expectation(std::span<const long> exponents, long n, long m,
                                  const BigCount& cap) {
  if (static_cast<long>(exponents.size()) != n)
    throw std::invalid_argument("product_expectation: got " + std::to_string(exponents.size()) +
                                " exponents for n = " + std::to_string(n));
  long total = 0;
  for (long e : exponents) {
    if (e < 0) throw std::invalid_argument("product_expectation: exponents must be >= 0");
    total += e;
  }
  if (total < 2 || total % 2 != 0)
    throw std::invalid_argument("product_expectation: exponents must sum to an even number >= 2");

  BigCount diff = 0;  // (+1 for even parity of the negative-sign exponents, -1 for odd)
  const BigCount count = enumerate_sign_vectors(
      n, m,
      [&](std::span<const int> eps) {
        int parity = 0;
        for (std::size_t i = 0; i < eps.size(); ++i)
          if (eps[i] < 0) parity ^= static_cast<int>(exponents[i] & 1);
        diff += parity ? -1 : +1;
      },
      cap);
  if (count == 0) throw std::domain_error("conditioning on null event");
  return make_rational(diff, count);
}

CompositionTally tally_compositions(const Parameters& params, const BigCount& cap) {
  const long p2 = 2 * params.p();
  const long ell = params.ell();
  const BigCount total =
      weak_composition_count(static_cast<unsigned long>(p2), static_cast<unsigned long>(params.n()));
  if (total > cap)
    throw CapExceeded("composition enumeration would visit " + total.get_str() +
                          " compositions, above the cap of " + cap.get_str(),
                      total, cap);
  BigCount te = 0;
  BigCount to = 0;
  for_each_weak_composition(p2, params.n(), [&](std::span<const long> c) {
    long s = 0;
    for (long i = 0; i < ell; ++i) s += c[i];
    if (s % 2 == 0)
      ++te;
    else
      ++to;
  });
  return {te, to, total};
}

ProbeReport inequality_probe(const Parameters& params, const ProbeStrategy& strategy,
                             const BigCount& cap) {
  const long n = params.n();
  std::vector<std::pair<std::string, CoefficientVector>> vectors;

  for (long i = 0; i < n; ++i) {
    CoefficientVector a(n, ExactRational(0));
    a[i] = 1;
    vectors.emplace_back("e" + std::to_string(i + 1), std::move(a));
  }
  vectors.emplace_back("ones", CoefficientVector(n, ExactRational(1)));
  {
    CoefficientVector alt(n);
    for (long i = 0; i < n; ++i) alt[i] = (i % 2 == 0) ? 1 : -1;
    vectors.emplace_back("alternating", std::move(alt));
  }
  if (n >= 2) {
    CoefficientVector c(n, ExactRational(0));
    c[0] = 1;
    c[1] = -1;
    vectors.emplace_back("contrast", std::move(c));
  }

  // Raw engine outputs only: std::uniform_int_distribution is free to map
  // them differently per standard library, and these vectors must be
  // bit-identical everywhere for a given seed.
  std::mt19937_64 eng(strategy.seed);
  for (unsigned t = 0; t < strategy.trials; ++t) {
    CoefficientVector a(n);
    for (;;) {
      bool nonzero = false;
      for (long i = 0; i < n; ++i) {
        const std::uint64_t r1 = eng();
        const std::uint64_t r2 = eng();
        const unsigned long den = 1 + static_cast<unsigned long>(r1 % 64);
        const long num =
            static_cast<long>(r2 % (2 * den + 1)) - static_cast<long>(den);
        a[i] = make_rational(num, den);
        if (num != 0) nonzero = true;
      }
      if (nonzero) break;  // an all-zero vector is redrawn in full
    }
    vectors.emplace_back("random" + std::to_string(t), std::move(a));
  }

  const ExactRational c2p = best_constant_2p_power(params);
  ProbeReport report;
  report.max_ratio = -1;
  for (auto& [label, a] : vectors) {
    ExactRational norm2 = 0;
    for (const auto& ai : a) norm2 += ai * ai;
    const ExactRational bound = c2p * pow_rational(norm2, static_cast<unsigned long>(params.p()));
    const ExactRational moment = conditional_moment(a, params, cap);
    const ExactRational ratio = moment / bound;
    if (report.records.empty() || ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax = report.records.size();
    }
    if (ratio > 1) ++report.violation_count;
    report.records.push_back(ProbeRecord{label, std::move(a), moment, bound, ratio});
  }
  return report;
}

}  // namespace khintchine::oracle
