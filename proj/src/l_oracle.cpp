#include "lident/l_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lident/bernoulli.hpp"

namespace lident {

namespace {

// Fixed Euler-Maclaurin parameters; conservative at desk scale.
constexpr int kShift = 30;       // shifted terms
constexpr int kCorrections = 12; // B_{2j} correction terms

// B_{2j}/(2j)! as doubles, j = 1..kCorrections+1.
const std::vector<double>& em_coeffs() {
  static const std::vector<double> c = [] {
    std::vector<double> v;
    for (int j = 1; j <= kCorrections + 1; ++j) {
      Rational r = bernoulli(2 * j) / Rational(factorial(2 * j));
      v.push_back(to_double(r));
    }
    return v;
  }();
  return c;
}

// B_{2j}/(2j) as doubles, for the digamma asymptotic series.
const std::vector<double>& psi_coeffs() {
  static const std::vector<double> c = [] {
    std::vector<double> v;
    for (int j = 1; j <= kCorrections + 1; ++j)
      v.push_back(to_double(bernoulli(2 * j) / Rational(2 * j)));
    return v;
  }();
  return c;
}

}  // namespace

RealApprox hurwitz_zeta(int s, const Rational& x) {
  if (s < 2) throw std::domain_error("hurwitz_zeta: s must be >= 2");
  double xd = to_double(x);
  if (!(xd > 0.0 && xd <= 1.0))
    throw std::domain_error("hurwitz_zeta: x must lie in (0, 1]");

  double sum = 0.0;
  for (int n = 0; n < kShift; ++n) sum += std::pow(n + xd, -s);
  double T = kShift + xd;
  sum += std::pow(T, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(T, -static_cast<double>(s));

  // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * T^{-(s+2j-1)}
  double poch = s;                       // rising factorial, 2j-1 factors
  double tpow = std::pow(T, -(s + 1.0)); // T^{-(s+2j-1)}
  const auto& c = em_coeffs();
  double first_omitted = 0.0;
  for (int j = 1; j <= kCorrections + 1; ++j) {
    double term = c[j - 1] * poch * tpow;
    if (j <= kCorrections)
      sum += term;
    else
      first_omitted = std::abs(term);
    poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    tpow /= T * T;
  }
  return {sum, first_omitted + 8 * std::abs(sum) * 1.1e-16};
}

RealApprox digamma(const Rational& x) {
  if (x <= 0) throw std::domain_error("digamma: x must be positive");
  double xd = to_double(x);
  double recurrence = 0.0;
  for (int k = 0; k < kShift; ++k) recurrence += 1.0 / (xd + k);
  double y = xd + kShift;
  double sum = std::log(y) - 0.5 / y;
  double y2 = 1.0 / (y * y);
  double ypow = y2;
  const auto& c = psi_coeffs();
  double first_omitted = 0.0;
  for (int j = 1; j <= kCorrections + 1; ++j) {
    double term = c[j - 1] * ypow;
    if (j <= kCorrections)
      sum -= term;
    else
      first_omitted = std::abs(term);
    ypow *= y2;
  }
  return {sum - recurrence, first_omitted + 8 * (std::abs(sum) + recurrence) * 1.1e-16};
}

LValue l_value(const DirichletCharacter& chi, int s) {
  long q = chi.modulus();
  if (s < 1) throw std::domain_error("l_value: s must be >= 1");
  if (s == 1 && chi.is_principal())
    throw std::domain_error("l_value: L(1, principal) diverges");

  ComplexApprox acc;
  if (s >= 2) {
    double scale = std::pow(static_cast<double>(q), -s);
    for (long a = 1; a <= q; ++a) {
      CharValue cv = chi.eval(a);
      if (cv.zero) continue;
      RealApprox hz = hurwitz_zeta(s, make_rational(a, q));
      acc += cv.to_approx() * ComplexApprox(hz.value * scale, 0.0,
                                            hz.err * scale);
    }
    return {s, q, chi.index(), acc, LMethod::hurwitz};
  }
  for (long a = 1; a <= q; ++a) {
    CharValue cv = chi.eval(a);
    if (cv.zero) continue;
    RealApprox ps = digamma(make_rational(a, q));
    acc += cv.to_approx() * ComplexApprox(-ps.value / q, 0.0, ps.err / q);
  }
  return {1, q, chi.index(), acc, LMethod::digamma_path};
}

LValue l_direct(const DirichletCharacter& chi, int s, long N) {
  if (s < 2) throw std::domain_error("l_direct: s must be >= 2");
  long q = chi.modulus();
  ComplexApprox acc;
  std::complex<double> sum{0.0, 0.0};
  std::vector<std::complex<double>> chiv(q);
  for (long r = 0; r < q; ++r) chiv[r] = chi.eval(r).to_complex();
  for (long n = 1; n <= N; ++n)
    sum += chiv[n % q] * std::pow(static_cast<double>(n), -s);
  double tail = std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
  acc = ComplexApprox(sum, tail + 4e-16 * N);
  return {s, q, chi.index(), acc, LMethod::direct};
}

double mean_value_lhs(const CharacterGroup& g, int s, int parity_sign) {
  double total = 0.0;
  for (const auto& chi : enumerate_characters(g)) {
    if (chi.parity() != parity_sign) continue;
    if (s == 1 && chi.is_principal()) continue;
    double a = l_value(chi, s).value.abs();
    total += a * a;
  }
  return total;
}

const char* l_method_name(LMethod m) {
  switch (m) {
    case LMethod::hurwitz: return "hurwitz";
    case LMethod::digamma_path: return "digamma";
    default: return "direct";
  }
}

}  // namespace lident
