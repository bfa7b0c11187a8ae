#include "lident/identities.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lident/bernoulli.hpp"
#include "lident/l_oracle.hpp"
#include "lident/special.hpp"

namespace lident {

const char* appell_sign_name(AppellSign c) {
  return c == AppellSign::printed ? "printed" : "alternating";
}
const char* theorem1_prefactor_name(Theorem1Prefactor c) {
  return c == Theorem1Prefactor::s_mod_2 ? "s_mod_2" : "s_plus_1_mod_2";
}
const char* corollary10_prefactor_name(Corollary10Prefactor c) {
  return c == Corollary10Prefactor::one ? "one" : "imaginary_unit";
}

AppellSequence appell_constants(unsigned nmax, AppellSign conv) {
  if (nmax > 40) throw std::domain_error("appell_constants: nmax > 40");
  AppellSequence seq;
  seq.convention = conv;
  seq.a.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    if (n == 0) {
      seq.a.emplace_back(make_rational(1, 2));
    } else if (n == 1) {
      seq.a.emplace_back(PiScalar(1, make_rational(-1, 2)));
    } else if (n % 2 == 1) {
      seq.a.emplace_back();
    } else {
      unsigned k = n / 2;
      PiScalar a2k = zeta_even(k) * Rational(factorial(n));
      if (conv == AppellSign::alternating && k % 2 == 0) a2k *= Rational(-1);
      seq.a.push_back(a2k);
    }
  }
  return seq;
}

PiPoly g_polynomial(unsigned n, AppellSign conv) {
  AppellSequence seq = appell_constants(n, conv);
  PiPoly p;
  for (unsigned k = 0; k <= n; ++k) {
    if (seq.a[k].is_zero()) continue;
    p += PiPoly::monomial(n - k, seq.a[k] * Rational(binomial(n, k)));
  }
  return p;
}

PiScalar f_eval(int s, const Rational& r, AppellSign conv) {
  if (s < 1) throw std::domain_error("f_eval: s must be >= 1");
  PiScalar g = g_polynomial(static_cast<unsigned>(s), conv)
                   .eval_at_pi_multiple(r);
  Rational scale = Rational(1) / Rational(factorial(s));
  int m = s % 4;
  if (m == 0 || m == 1) scale = -scale;
  return g * scale;
}

namespace {

// sin table when s is even, cos table when s is odd.
std::vector<double> theorem1_trig_table(long q, int s) {
  auto roots = roots_of_unity(q);
  std::vector<double> trig(q);
  const bool use_sin = (s % 2 == 0);
  for (long r = 0; r < q; ++r)
    trig[r] = use_sin ? roots[r].imag() : roots[r].real();
  return trig;
}

// Partial sum over n in [lo, hi] for one j.
double theorem1_block(const std::vector<double>& trig, long q, int s, long j,
                      long lo, long hi) {
  double part = 0.0;
  long idx = lo % q * (j % q) % q;
  long step = j % q;
  for (long n = lo; n <= hi; ++n) {
    double inv = 1.0 / static_cast<double>(n);
    double w = inv;
    for (int t = 1; t < s; ++t) w *= inv;
    part += trig[idx] * w;
    idx += step;
    if (idx >= q) idx -= q;
  }
  return part;
}

// Fixed accumulation blocks so totals do not depend on thread count.
constexpr long kInnerBlock = 1 << 16;

}  // namespace

std::vector<double> theorem1_inner_sums(long q, int s, long N) {
  auto trig = theorem1_trig_table(q, s);
  std::vector<double> out(q, 0.0);
  for (long j = 1; j <= q; ++j) {
    double total = 0.0;
    for (long lo = 1; lo <= N; lo += kInnerBlock)
      total += theorem1_block(trig, q, s, j, lo, std::min(N, lo + kInnerBlock - 1));
    out[j - 1] = total;
  }
  return out;
}

std::vector<double> theorem1_inner_sums_parallel(long q, int s, long N) {
  auto trig = theorem1_trig_table(q, s);
  const long nblocks = (N + kInnerBlock - 1) / kInnerBlock;
  std::vector<double> parts(q * nblocks, 0.0);
#pragma omp parallel for schedule(dynamic) collapse(2)
  for (long j = 1; j <= q; ++j) {
    for (long b = 0; b < nblocks; ++b) {
      long lo = 1 + b * kInnerBlock;
      long hi = std::min(N, lo + kInnerBlock - 1);
      parts[(j - 1) * nblocks + b] = theorem1_block(trig, q, s, j, lo, hi);
    }
  }
  // merge in block order; identical to the serial accumulation
  std::vector<double> out(q, 0.0);
  for (long j = 1; j <= q; ++j)
    for (long b = 0; b < nblocks; ++b) out[j - 1] += parts[(j - 1) * nblocks + b];
  return out;
}

double theorem1_tail_bound(long q, int s, long N) {
  return std::pow(static_cast<double>(q), 1.5) *
         std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
}

ComplexApprox theorem1_L(const GaussTable& table,
                         const std::vector<double>& inner_sums, int s, long N,
                         int chi_parity, Theorem1Prefactor conv) {
  if (s < 2) throw std::domain_error("theorem1_L: s must be >= 2");
  int s_parity = (s % 2 == 0) ? 1 : -1;
  if (s_parity == chi_parity)
    throw std::invalid_argument("theorem1_L: s and chi must have different parity");
  long q = table.q;
  ComplexApprox acc;
  for (long j = 1; j <= q; ++j)
    acc += table.at(j) * inner_sums[j - 1];
  int e = conv == Theorem1Prefactor::s_mod_2 ? s % 2 : (s + 1) % 2;
  ComplexApprox out =
      ComplexApprox(minus_i_pow(e) / static_cast<double>(q), 0.0) * acc;
  out.err += theorem1_tail_bound(q, s, N);
  return out;
}

ComplexApprox theorem1_L(const DirichletCharacter& chi, int s, long N,
                         Theorem1Prefactor conv) {
  GaussTable table = gauss_table(chi);
  auto inner = theorem1_inner_sums(chi.modulus(), s, N);
  return theorem1_L(table, inner, s, N, chi.parity(), conv);
}

ComplexApprox theorem2_L(const GaussTable& table, int s, AppellSign conv) {
  if (s < 1) throw std::domain_error("theorem2_L: s must be >= 1");
  long q = table.q;
  PiPoly gs = g_polynomial(static_cast<unsigned>(s), conv);
  ComplexApprox acc;
  for (long j = 1; j <= q; ++j) {
    double gsx = gs.eval_at_pi_multiple(make_rational(2 * j, q)).value();
    acc += table.at(j) * gsx;
  }
  double scale = -1.0 / (static_cast<double>(q) * to_double(Rational(factorial(s))));
  return ComplexApprox(minus_i_pow(s) * scale, 0.0) * acc;
}

ComplexApprox theorem2_L(const DirichletCharacter& chi, int s,
                         AppellSign conv) {
  int s_parity = (s % 2 == 0) ? 1 : -1;
  if (s_parity != chi.parity())
    throw std::invalid_argument("theorem2_L: s and chi must have the same parity");
  if (s == 1 && chi.parity() == 1)
    throw std::invalid_argument("theorem2_L: L(1, even chi) not covered");
  return theorem2_L(gauss_table(chi), s, conv);
}

ComplexApprox corollary_even_L2(const GaussTable& table, int chi_parity) {
  if (chi_parity != 1)
    throw std::invalid_argument("corollary_even_L2: chi must be even");
  long q = table.q;
  ComplexApprox sum_j2, sum_j, sum_g;
  for (long j = 1; j <= q; ++j) {
    sum_j2 += table.at(j) * static_cast<double>(j * j);
    sum_j += table.at(j) * static_cast<double>(j);
    sum_g += table.at(j);
  }
  const double pi2 = PiScalar::pi(2).value();
  double q_d = static_cast<double>(q);
  ComplexApprox out = sum_j2 * (pi2 / (q_d * q_d * q_d));
  out -= sum_j * (pi2 / (q_d * q_d));
  // the pi^2/6q term multiplies sum_j G(j,chi), which vanishes
  out += sum_g * (pi2 / (6.0 * q_d));
  return out;
}

ComplexApprox corollary_even_L2(const DirichletCharacter& chi) {
  return corollary_even_L2(gauss_table(chi), chi.parity());
}

ComplexApprox corollary_odd_L2(const GaussTable& table, int chi_parity,
                               Corollary10Prefactor conv) {
  if (chi_parity != -1)
    throw std::invalid_argument("corollary_odd_L2: chi must be odd");
  long q = table.q;
  ComplexApprox acc;
  const double two_pi = 2.0 * static_cast<double>(kPi);
  for (long j = 1; j < q; ++j) {
    double theta = std::min(two_pi, two_pi * j / q);
    acc += table.at(j) * log_sin_integral(theta);
  }
  // j = q contributes log_sin_integral(2 pi) = 0
  std::complex<double> c =
      conv == Corollary10Prefactor::one ? std::complex<double>{1, 0}
                                        : std::complex<double>{0, 1};
  return ComplexApprox(c / static_cast<double>(q), 0.0) * acc;
}

ComplexApprox corollary_odd_L2(const DirichletCharacter& chi,
                               Corollary10Prefactor conv) {
  return corollary_odd_L2(gauss_table(chi), chi.parity(), conv);
}

ComplexApprox alkan_L(const GaussTable& table, int s, int chi_parity) {
  if (s < 1) throw std::domain_error("alkan_L: s must be >= 1");
  int s_parity = (s % 2 == 0) ? 1 : -1;
  if (s_parity != chi_parity)
    throw std::invalid_argument("alkan_L: s and chi must have the same parity");
  long q = table.q;
  ComplexApprox rhs;
  for (long j = 1; j <= q; ++j) {
    Rational inner(0);
    Rational jq = make_rational(j, q);
    for (int k = 0; k <= 2 * (s / 2) && k <= s; ++k)
      inner += Rational(binomial(s, k)) * bernoulli(k) *
               rational_pow(jq, s - k);
    rhs += table.at(j) * to_double(inner);
  }
  // L = rhs * i^s 2^{s-1} pi^s (-1)^{s+1} / (q s!)
  std::complex<double> is = minus_i_pow((4 - s % 4) % 4);  // i^s
  double mag = std::pow(2.0, s - 1) * PiScalar::pi(s).value() /
               (static_cast<double>(q) * to_double(Rational(factorial(s))));
  if (s % 2 == 0) mag = -mag;  // (-1)^{s+1}
  return ComplexApprox(is * mag, 0.0) * rhs;
}

ComplexApprox alkan_L(const DirichletCharacter& chi, int s) {
  return alkan_L(gauss_table(chi), s, chi.parity());
}

namespace {

// Exact Euler product prod_{p|q} (1 - p^{-m}) as a rational.
Rational euler_product(const Factorization& f, unsigned m) {
  Rational prod(1);
  for (auto [p, e] : f.factors) {
    Rational pm = rational_pow(Rational(p), m);
    prod *= (pm - 1) / pm;
  }
  return prod;
}

}  // namespace

VerificationRecord meanvalue_identity_s1_odd(long q) {
  CharacterGroup g(q);
  const Factorization& f = g.factorization();
  Rational phi(g.totient());
  Rational coeff = phi / 12 * euler_product(f, 2) -
                   phi * phi / (Rational(4) * Rational(q) * Rational(q));
  PiScalar rhs(2, coeff);

  VerificationRecord rec;
  rec.q = q;
  rec.s = 1;
  rec.identity = "meanvalue_s1_odd";
  rec.convention = "exact";
  rec.identity_value = ComplexApprox(rhs.value(), 0.0, 1e-15 * std::abs(rhs.value()));
  rec.oracle_value = ComplexApprox(mean_value_lhs(g, 1, -1), 0.0, 1e-10);
  rec.finalize();
  return rec;
}

VerificationRecord meanvalue_identity_s2_even(long q) {
  CharacterGroup g(q);
  const Factorization& f = g.factorization();
  Rational phi(g.totient());
  Rational qq = Rational(q) * Rational(q);
  Rational c4 = phi / 180 * euler_product(f, 4);
  Rational c2 = phi / (Rational(18) * qq) * euler_product(f, 2);
  PiScalar rhs(4, c4 + c2);

  VerificationRecord rec;
  rec.q = q;
  rec.s = 2;
  rec.identity = "meanvalue_s2_even";
  rec.convention = "exact";
  rec.identity_value = ComplexApprox(rhs.value(), 0.0, 1e-15 * std::abs(rhs.value()));
  rec.oracle_value = ComplexApprox(mean_value_lhs(g, 2, +1), 0.0, 1e-10);
  rec.finalize();
  return rec;
}

double asymptotic_residual_s1(long q) {
  CharacterGroup g(q);
  return mean_value_lhs(g, 1, -1) - g.totient() / 2.0;
}

}  // namespace lident
