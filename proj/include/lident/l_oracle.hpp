#ifndef LIDENT_L_ORACLE_HPP
#define LIDENT_L_ORACLE_HPP

#include <string>

#include "lident/characters.hpp"
#include "lident/complex_approx.hpp"
#include "lident/rational.hpp"

namespace lident {

struct RealApprox {
  double value = 0.0;
  double err = 0.0;
};

// zeta(s, x) = sum_{n>=0} (n+x)^{-s} by Euler-Maclaurin, integer s >= 2,
// x in (0, 1].
RealApprox hurwitz_zeta(int s, const Rational& x);

// psi(x) by upward recurrence plus the asymptotic series, x > 0.
RealApprox digamma(const Rational& x);

enum class LMethod { hurwitz, digamma_path, direct };

struct LValue {
  int s = 0;
  long q = 0;
  long chi_index = 0;
  ComplexApprox value;
  LMethod method = LMethod::hurwitz;
};

// L(s, chi) via q^{-s} sum_a chi(a) zeta(s, a/q) for s >= 2, or
// -(1/q) sum_a chi(a) psi(a/q) for s = 1 (nonprincipal only).
LValue l_value(const DirichletCharacter& chi, int s);

// Truncated series with the rigorous tail bound N^{1-s}/(s-1); cross-oracle.
LValue l_direct(const DirichletCharacter& chi, int s, long N);

// sum over characters of the selected parity of |L(s, chi)|^2; the
// principal character is included on the even side.
double mean_value_lhs(const CharacterGroup& g, int s, int parity_sign);

const char* l_method_name(LMethod m);

}  // namespace lident

#endif
