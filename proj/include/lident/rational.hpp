#ifndef LIDENT_RATIONAL_HPP
#define LIDENT_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace lident {

// Exact rationals are mpq_class throughout; GMP keeps them canonical
// (positive denominator, reduced to lowest terms).
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// The two-argument mpq_class constructor does not reduce; this does.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// r^k for k >= 0.
inline Rational rational_pow(const Rational& r, unsigned long k) {
  Rational out(1);
  Rational base = r;
  while (k > 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

// x - floor(x), in [0,1).
inline Rational fractional_part(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline double to_double(const Rational& x) { return x.get_d(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace lident

#endif
