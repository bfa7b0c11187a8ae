#include <doctest.h>

#include <random>

#include "lident/bernoulli.hpp"
#include "lident/special.hpp"
#include "support/oracles.hpp"

using namespace lident;
namespace oracle = lident::testing;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(2) == make_rational(1, 6));
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  for (unsigned k = 1; k <= 60; ++k) CHECK(bernoulli(2 * k + 1) == 0);
}

TEST_CASE("bernoulli defining relation") {
  // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
  for (unsigned m = 1; m <= 60; ++m) {
    Rational acc = 0;
    for (unsigned k = 0; k <= m; ++k)
      acc += Rational(binomial(m + 1, k)) * bernoulli(k);
    CHECK(acc == 0);
  }
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(2, make_rational(1, 4)) == make_rational(-1, 48));
  CHECK(bernoulli_poly(1, make_rational(1, 2)) == 0);
  CHECK(bernoulli_poly(3, Rational(0)) == 0);
  // B_n(1) - B_n(0) = 0 for n != 1
  for (unsigned n = 2; n <= 12; ++n)
    CHECK(bernoulli_poly(n, Rational(1)) == bernoulli_poly(n, Rational(0)));
}

TEST_CASE("periodic bernoulli") {
  CHECK(periodic_bernoulli(2, make_rational(9, 4)) ==
        bernoulli_poly(2, make_rational(1, 4)));
  CHECK(periodic_bernoulli(2, make_rational(-3, 4)) ==
        bernoulli_poly(2, make_rational(1, 4)));
  CHECK(periodic_bernoulli(1, Rational(5)) == 0);
  CHECK(periodic_bernoulli(3, Rational(-2)) == 0);
}

TEST_CASE("zeta at even integers") {
  CHECK(zeta_even(1) == PiScalar(2, make_rational(1, 6)));
  CHECK(zeta_even(2) == PiScalar(4, make_rational(1, 90)));
  CHECK(zeta_even(3) == PiScalar(6, make_rational(1, 945)));
  CHECK(zeta_even(4) == PiScalar(8, make_rational(1, 9450)));
}

TEST_CASE("closed forms of the basic trig series") {
  // sin series converges plainly; cos series needs Cesaro smoothing
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> theta(0.3, 5.9);
  for (int trial = 0; trial < 12; ++trial) {
    double x = theta(rng);
    CHECK(lemma2_sin_closed(x) ==
          doctest::Approx(oracle::series_sin(x, 1, 2000000)).epsilon(1e-5));
    CHECK(lemma2_cos_closed(x) ==
          doctest::Approx(oracle::series_cos_cesaro(x, 400000, 3000))
              .epsilon(1e-5));
  }
  CHECK(lemma2_sin_closed(kPi) == doctest::Approx(0.0));
  CHECK(lemma2_cos_closed(kPi) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(lemma2_sin_closed(0.0), std::domain_error);
  CHECK_THROWS_AS(lemma2_cos_closed(2 * static_cast<double>(kPi) + 0.1),
                  std::domain_error);
}

TEST_CASE("clausen special values") {
  // Cl_2(pi/2) = Catalan
  CHECK(clausen(kPi / 2) ==
        doctest::Approx(0.915965594177219015054603514932).epsilon(1e-13));
  CHECK(clausen(kPi / 4) ==
        doctest::Approx(0.98187215105020335671792454306).epsilon(1e-13));
  CHECK(clausen(kPi / 3) ==
        doctest::Approx(1.01494160640965362502).epsilon(1e-13));
  CHECK(clausen(0.0) == doctest::Approx(0.0));
  CHECK(clausen(kPi) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(clausen(2 * static_cast<double>(kPi)) == doctest::Approx(0.0));
}

TEST_CASE("clausen matches its defining series and reflection") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> theta(0.05, 2 * 3.14159);
  for (int trial = 0; trial < 20; ++trial) {
    double t = theta(rng);
    // the truncated series tail is O(1/(N^2 sin(t/2))), an absolute bound
    CHECK(std::abs(clausen(t) - oracle::series_sin(t, 2, 200000)) < 1e-7);
    CHECK(clausen(2 * static_cast<double>(kPi) - t) ==
          doctest::Approx(-clausen(t)).epsilon(1e-12));
  }
}

TEST_CASE("log sin integral against quadrature") {
  auto integrand = [](double x) { return std::log(2.0 * std::sin(x / 2)); };
  for (double t : {0.7, 1.3, static_cast<double>(kPi) / 3, 2.9, 4.4}) {
    // integrable log singularity at 0: start just above it
    double head = oracle::adaptive_simpson(integrand, 1e-12, 1e-4, 1e-14);
    double body = oracle::adaptive_simpson(integrand, 1e-4, t, 1e-12);
    CHECK(log_sin_integral(t) == doctest::Approx(head + body).epsilon(1e-8));
  }
}

TEST_CASE("log sin integral derivative recovers the integrand") {
  for (double t : {0.9, 1.7, 2.5, 3.9, 5.1}) {
    double d = oracle::central_difference(log_sin_integral, t, 1e-5);
    CHECK(d == doctest::Approx(std::log(2.0 * std::sin(t / 2))).epsilon(1e-7));
  }
}

TEST_CASE("dedekind sums") {
  CHECK(dedekind_sum(1, 1, 3) == make_rational(1, 18));
  CHECK(dedekind_sum(3, 1, 3) == 0);  // h = q: all Bbar_1 at integers
  CHECK(dedekind_sum(2, 1, 5) == dedekind_sum(3, 1, 5));
  // reciprocity-free sanity: S(h,1,q) = S(h', 1, q) when h h' = 1 mod q
  CHECK(dedekind_sum(2, 1, 7) == dedekind_sum(4, 1, 7));
  // n = 2 brute force
  Rational brute = 0;
  for (long a = 1; a <= 5; ++a)
    brute += periodic_bernoulli(2, make_rational(a, 5)) *
             periodic_bernoulli(2, make_rational(2 * a, 5));
  CHECK(dedekind_sum(2, 2, 5) == brute);
}
