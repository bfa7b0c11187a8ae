#ifndef LIDENT_INTMATH_HPP
#define LIDENT_INTMATH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace lident {

struct Factorization {
  // (prime, exponent), primes strictly increasing.
  std::vector<std::pair<std::int64_t, int>> factors;

  std::int64_t value() const {
    std::int64_t v = 1;
    for (auto [p, e] : factors)
      for (int i = 0; i < e; ++i) v *= p;
    return v;
  }
};

// Trial division; n in [2, 2^63).
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

std::int64_t totient(std::int64_t n);
std::int64_t totient(const Factorization& f);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Smallest generator of (Z/p^e)^*, p an odd prime.
std::int64_t primitive_root(std::int64_t p, int e);

}  // namespace lident

#endif
