#ifndef LIDENT_IDENTITIES_HPP
#define LIDENT_IDENTITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lident/characters.hpp"
#include "lident/complex_approx.hpp"
#include "lident/gauss.hpp"
#include "lident/pi_algebra.hpp"

namespace lident {

// The three sites where the printed formulas admit two readings.
enum class AppellSign { printed, alternating };
enum class Theorem1Prefactor { s_mod_2, s_plus_1_mod_2 };
enum class Corollary10Prefactor { one, imaginary_unit };

struct ConventionSet {
  Theorem1Prefactor theorem1 = Theorem1Prefactor::s_plus_1_mod_2;
  AppellSign appell = AppellSign::alternating;
  Corollary10Prefactor corollary10 = Corollary10Prefactor::imaginary_unit;

  // The readings selected by the adjudication sweep.
  static ConventionSet adjudicated() { return ConventionSet{}; }
  static ConventionSet as_printed() {
    return {Theorem1Prefactor::s_mod_2, AppellSign::printed,
            Corollary10Prefactor::one};
  }
};

const char* appell_sign_name(AppellSign c);
const char* theorem1_prefactor_name(Theorem1Prefactor c);
const char* corollary10_prefactor_name(Corollary10Prefactor c);

struct AppellSequence {
  std::vector<PiScalar> a;  // a_0..a_nmax
  AppellSign convention = AppellSign::alternating;
};

// a_0 = 1/2, a_1 = -pi/2, a_{2k+1} = 0, a_{2k} = +-(2k)! zeta(2k) per
// convention.
AppellSequence appell_constants(unsigned nmax, AppellSign conv);

// G_n(x) = sum_k C(n,k) a_k x^{n-k}, exact.
PiPoly g_polynomial(unsigned n, AppellSign conv);

// Closed form of the Fourier series F_s at x = r*pi: F_s = +-G_s/s!,
// sign - for s = 0,1 (mod 4), + for s = 2,3 (mod 4).
PiScalar f_eval(int s, const Rational& r, AppellSign conv);

// Truncated inner sums T_j = sum_{n<=N} trig(2 pi n j / q)/n^s for
// j = 1..q; sin when s is even, cos when s is odd (mixed-parity case).
std::vector<double> theorem1_inner_sums(long q, int s, long N);
std::vector<double> theorem1_inner_sums_parallel(long q, int s, long N);

// Mixed-parity identity: prefactor^e / q * sum_j G(j,chi) T_j, where the
// prefactor exponent e is s or s+1 mod 2 per convention.  err includes
// the tail bound q^{3/2} N^{1-s}/(s-1).
ComplexApprox theorem1_L(const DirichletCharacter& chi, int s, long N,
                         Theorem1Prefactor conv);
ComplexApprox theorem1_L(const GaussTable& table,
                         const std::vector<double>& inner_sums, int s, long N,
                         int chi_parity, Theorem1Prefactor conv);

double theorem1_tail_bound(long q, int s, long N);

// Same-parity identity: -(-i)^s/(q s!) sum_j G(j,chi) G_s(2 pi j / q).
ComplexApprox theorem2_L(const DirichletCharacter& chi, int s, AppellSign conv);
ComplexApprox theorem2_L(const GaussTable& table, int s, AppellSign conv);

// L(2, even chi) as the explicit three-term form.
ComplexApprox corollary_even_L2(const DirichletCharacter& chi);
ComplexApprox corollary_even_L2(const GaussTable& table, int chi_parity);

// L(2, odd chi) = (c/q) sum_j G(j,chi) int_0^{2 pi j/q} log(2 sin(x/2)) dx,
// c in {1, i} per convention.
ComplexApprox corollary_odd_L2(const DirichletCharacter& chi,
                               Corollary10Prefactor conv);
ComplexApprox corollary_odd_L2(const GaussTable& table, int chi_parity,
                               Corollary10Prefactor conv);

// Same-parity closed form through Bernoulli polynomial sums.
ComplexApprox alkan_L(const DirichletCharacter& chi, int s);
ComplexApprox alkan_L(const GaussTable& table, int s, int chi_parity);

struct VerificationRecord {
  long q = 0;
  long chi_index = -1;  // -1 for aggregate (mean-value) identities
  int s = 0;
  std::string identity;
  std::string convention;
  ComplexApprox identity_value;
  ComplexApprox oracle_value;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double tolerance = 0.0;

  bool passed() const { return abs_dev <= tolerance; }
  void finalize() {
    abs_dev = identity_value.deviation_from(oracle_value);
    double scale = oracle_value.abs();
    rel_dev = scale > 0 ? abs_dev / scale : abs_dev;
  }
};

// Closed forms for the parity-restricted second moments; exact Euler
// products on the identity side, oracle sums on the other.
VerificationRecord meanvalue_identity_s1_odd(long q);
VerificationRecord meanvalue_identity_s2_even(long q);

// sum_{chi odd} |L(1,chi)|^2 - phi(q)/2.
double asymptotic_residual_s1(long q);

}  // namespace lident

#endif
