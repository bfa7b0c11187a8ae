#include "lident/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lident {

namespace {

std::vector<Rational>& cache() {
  static std::vector<Rational> c{Rational(1)};
  return c;
}
std::mutex cache_mutex;

}  // namespace

Rational bernoulli(unsigned n) {
  if (n > 200) throw std::domain_error("bernoulli: n > 200");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& c = cache();
  while (c.size() <= n) {
    unsigned m = static_cast<unsigned>(c.size());
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k)
      acc += Rational(binomial(m + 1, k)) * c[k];
    c.push_back(-acc / Rational(m + 1));
  }
  return c[n];
}

Rational bernoulli_poly(unsigned n, const Rational& x) {
  Rational acc(0);
  for (unsigned k = 0; k <= n; ++k)
    acc += Rational(binomial(n, k)) * bernoulli(k) * rational_pow(x, n - k);
  return acc;
}

Rational periodic_bernoulli(unsigned n, const Rational& x) {
  if (is_integer(x)) return Rational(0);
  return bernoulli_poly(n, fractional_part(x));
}

PiScalar zeta_even(unsigned k) {
  if (k < 1 || k > 50) throw std::domain_error("zeta_even: k in [1,50]");
  Rational coeff = bernoulli(2 * k) * rational_pow(Rational(4), k) /
                   (Rational(2) * Rational(factorial(2 * k)));
  if (k % 2 == 0) coeff = -coeff;  // (-1)^{k+1}
  return PiScalar(2 * k, coeff);
}

Rational dedekind_sum(long h, unsigned n, long q) {
  if (q < 2) throw std::domain_error("dedekind_sum: q must be >= 2");
  if (n < 1) throw std::domain_error("dedekind_sum: n must be >= 1");
  Rational acc(0);
  for (long a = 1; a <= q; ++a) {
    Rational b1 = periodic_bernoulli(n, make_rational(a, q));
    if (b1 == 0) continue;
    acc += b1 * periodic_bernoulli(n, make_rational(a * h, q));
  }
  return acc;
}

}  // namespace lident
