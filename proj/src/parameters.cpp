#include "khintchine/parameters.hpp"

#include <stdexcept>
#include <string>

namespace khintchine {

Parameters::Parameters(long n, long m, long p) : n_(n), m_(m), p_(p) {
  if (n < 1)
    throw std::invalid_argument("parameters: n must be >= 1 (got " + std::to_string(n) + ")");
  if (m < -n || m > n)
    throw std::invalid_argument("parameters: m must satisfy -n <= m <= n (got m = " +
                                std::to_string(m) + " with n = " + std::to_string(n) + ")");
  if (((n - m) % 2 + 2) % 2 != 0)
    throw std::invalid_argument(
        "parameters: n - m must be even -- a sum of n signs always has n's parity (got n = " +
        std::to_string(n) + ", m = " + std::to_string(m) + ")");
  if (p < 1)
    throw std::invalid_argument("parameters: p must be >= 1 (got " + std::to_string(p) + ")");
}

}  // namespace khintchine
