#include "khintchine/combinatorics.hpp"

#include <unordered_map>

namespace khintchine {
namespace {

// Small enough to stay modest in memory, big enough to cover every n the
// closed forms hit repeatedly in sweeps.
constexpr long kCacheMaxN = 4096;

BigCount binomial_gmp(unsigned long n, unsigned long k) {
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

BigCount binomial(long n, long k) {
  if (k == 0) return 1;
  if (k < 0 || n < 0 || n < k) return 0;
  if (n <= kCacheMaxN) {
    // k <= n <= 4096 < 2^13, so (n, k) packs into one key.
    thread_local std::unordered_map<unsigned long, BigCount> cache;
    const unsigned long key =
        (static_cast<unsigned long>(n) << 13) | static_cast<unsigned long>(k);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, binomial_gmp(n, k)).first;
    return it->second;
  }
  return binomial_gmp(n, k);
}

BigCount factorial(unsigned long n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigCount weak_composition_count(unsigned long s, unsigned long parts) {
  if (parts == 0) return s == 0 ? 1 : 0;
  return binomial(static_cast<long>(s + parts - 1), static_cast<long>(s));
}

}  // namespace khintchine
