#include "lident/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lident/bernoulli.hpp"
#include "lident/pi_algebra.hpp"

namespace lident {

namespace {

constexpr double kTwoPi = 2.0 * static_cast<double>(kPi);

void require_open_interval(double x) {
  if (!(x > 0.0 && x < kTwoPi))
    throw std::domain_error("argument must lie in (0, 2pi)");
}

// zeta(2n)/(n(2n+1)) for the Clausen power series, cached.
const std::vector<double>& clausen_series_coeffs() {
  static const std::vector<double> coeffs = [] {
    std::vector<double> c;
    for (unsigned n = 1; n <= 30; ++n)
      c.push_back(zeta_even(n).value() / (n * (2.0 * n + 1.0)));
    return c;
  }();
  return coeffs;
}

// Cl_2 on [0, pi] via theta - theta log theta + theta * sum of the
// geometrically convergent zeta(2n) series in (theta/2pi)^2.
double clausen_half(double theta) {
  if (theta == 0.0) return 0.0;
  const double r2 = (theta / kTwoPi) * (theta / kTwoPi);
  double acc = 0.0;
  double p = 1.0;
  for (double c : clausen_series_coeffs()) {
    p *= r2;
    double term = c * p;
    acc += term;
    if (std::abs(term) < 1e-17 * (1.0 + std::abs(acc))) break;
  }
  return theta - theta * std::log(theta) + theta * acc;
}

}  // namespace

double lemma2_sin_closed(double x) {
  require_open_interval(x);
  return (static_cast<double>(kPi) - x) / 2.0;
}

double lemma2_cos_closed(double x) {
  require_open_interval(x);
  return -std::log(2.0 * std::sin(x / 2.0));
}

double clausen(double theta) {
  if (!(theta >= 0.0 && theta <= kTwoPi))
    throw std::domain_error("clausen: theta must lie in [0, 2pi]");
  if (theta <= static_cast<double>(kPi)) return clausen_half(theta);
  return -clausen_half(kTwoPi - theta);
}

double log_sin_integral(double theta) { return -clausen(theta); }

}  // namespace lident
