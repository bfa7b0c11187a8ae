#ifndef LIDENT_BERNOULLI_HPP
#define LIDENT_BERNOULLI_HPP

#include "lident/pi_algebra.hpp"
#include "lident/rational.hpp"

namespace lident {

// Exact B_n from the recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0 (m >= 1),
// B_0 = 1.  Cached process-wide.
Rational bernoulli(unsigned n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact.
Rational bernoulli_poly(unsigned n, const Rational& x);

// B_n of the fractional part; zero at integers.
Rational periodic_bernoulli(unsigned n, const Rational& x);

// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), as the exact
// single term r * pi^{2k}.
PiScalar zeta_even(unsigned k);

// Generalized Dedekind sum S(h,n,q) = sum_{a=1}^{q} Bbar_n(a/q) Bbar_n(ah/q).
Rational dedekind_sum(long h, unsigned n, long q);

}  // namespace lident

#endif
