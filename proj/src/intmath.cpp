#include "lident/intmath.hpp"

#include <numeric>
#include <stdexcept>

namespace lident {

Factorization factorize(std::int64_t n) {
  if (n < 2) throw std::domain_error("factorize: n must be >= 2");
  Factorization f;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

std::int64_t totient(const Factorization& f) {
  std::int64_t t = 1;
  for (auto [p, e] : f.factors) {
    t *= p - 1;
    for (int i = 1; i < e; ++i) t *= p;
  }
  return t;
}

std::int64_t totient(std::int64_t n) {
  if (n == 1) return 1;
  return totient(factorize(n));
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<__int128>(r) * base % mod;
    base = static_cast<__int128>(base) * base % mod;
    exp >>= 1;
  }
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t primitive_root(std::int64_t p, int e) {
  if (p == 2 || !is_prime(p))
    throw std::domain_error("primitive_root: p must be an odd prime");
  if (e < 1) throw std::domain_error("primitive_root: e must be >= 1");
  std::int64_t m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  std::int64_t phi = (p - 1) * (m / p);
  Factorization pf = factorize(phi);
  for (std::int64_t g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    bool generates = true;
    for (auto [r, _] : pf.factors) {
      if (pow_mod(g, phi / r, m) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

}  // namespace lident
