// Test-side oracles, independent of the library's evaluation paths:
// truncated/smoothed series, adaptive quadrature, finite differences, and
// an exact zero test for sums of roots of unity via cyclotomic reduction.
#ifndef LIDENT_TESTS_ORACLES_HPP
#define LIDENT_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "lident/characters.hpp"
#include "lident/rational.hpp"

namespace lident::testing {

inline double series_sin(double x, int s, long N) {
  double acc = 0.0;
  for (long n = N; n >= 1; --n) acc += std::sin(n * x) / std::pow(n, s);
  return acc;
}

inline double series_cos(double x, int s, long N) {
  double acc = 0.0;
  for (long n = N; n >= 1; --n) acc += std::cos(n * x) / std::pow(n, s);
  return acc;
}

// Cesaro average of the last `window` partial sums; tames the conditionally
// convergent cosine series at s = 1.
inline double series_cos_cesaro(double x, long N, long window) {
  double partial = 0.0;
  std::vector<double> tail_partials;
  for (long n = 1; n <= N; ++n) {
    partial += std::cos(n * x) / n;
    if (n > N - window) tail_partials.push_back(partial);
  }
  double acc = 0.0;
  for (double p : tail_partials) acc += p;
  return acc / tail_partials.size();
}

// Adaptive Simpson quadrature.
inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol, int depth = 28) {
  auto simpson = [&](double lo, double hi) {
    double mid = 0.5 * (lo + hi);
    return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi));
  };
  std::function<double(double, double, double, double, int)> rec =
      [&](double lo, double hi, double whole, double eps, int d) -> double {
    double mid = 0.5 * (lo + hi);
    double left = simpson(lo, mid), right = simpson(mid, hi);
    if (d <= 0 || std::abs(left + right - whole) < 15.0 * eps)
      return left + right + (left + right - whole) / 15.0;
    return rec(lo, mid, left, eps / 2, d - 1) +
           rec(mid, hi, right, eps / 2, d - 1);
  };
  return rec(a, b, simpson(a, b), tol, depth);
}

inline double central_difference(const std::function<double(double)>& f,
                                 double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Cyclotomic polynomial Phi_L as integer coefficients (ascending degree),
// by exact division of x^L - 1 by the Phi_d for proper divisors d.
inline std::vector<Integer> cyclotomic(long L) {
  static std::map<long, std::vector<Integer>> memo;
  auto it = memo.find(L);
  if (it != memo.end()) return it->second;

  std::vector<Integer> num(L + 1, Integer(0));
  num[0] = -1;
  num[L] = 1;
  for (long d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    std::vector<Integer> phi_d = cyclotomic(d);
    // exact division num /= phi_d (phi_d monic)
    std::vector<Integer> quot(num.size() - phi_d.size() + 1, Integer(0));
    std::vector<Integer> rem = num;
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
      Integer c = rem[i + phi_d.size() - 1];
      quot[i] = c;
      if (c == 0) continue;
      for (std::size_t k = 0; k < phi_d.size(); ++k)
        rem[i + k] -= c * phi_d[k];
    }
    num = std::move(quot);
  }
  memo[L] = num;
  return num;
}

// Exact test: does sum_t counts[t] * e^{2 pi i t / L} equal zero?
// True iff Phi_L divides the count polynomial.
inline bool unity_sum_is_zero(std::vector<Integer> counts, long L) {
  std::vector<Integer> phi = cyclotomic(L);
  // reduce counts modulo the monic phi
  for (long i = static_cast<long>(counts.size()) - 1;
       i >= static_cast<long>(phi.size()) - 1; --i) {
    Integer c = counts[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k < phi.size(); ++k)
      counts[i - phi.size() + 1 + k] -= c * phi[k];
  }
  for (const auto& c : counts)
    if (c != 0) return false;
  return true;
}

// Exact zero test for a list of character values (zeros are dropped).
inline bool char_values_sum_to_zero(const std::vector<CharValue>& values) {
  long L = 1;
  for (const auto& v : values)
    if (!v.zero) L = std::lcm(L, v.den);
  std::vector<Integer> counts(L, Integer(0));
  for (const auto& v : values)
    if (!v.zero) counts[v.num * (L / v.den)] += 1;
  return unity_sum_is_zero(std::move(counts), L);
}

}  // namespace lident::testing

#endif
