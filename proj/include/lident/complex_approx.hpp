#ifndef LIDENT_COMPLEX_APPROX_HPP
#define LIDENT_COMPLEX_APPROX_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace lident {

// Complex double with a tracked absolute error bound.  Propagation is
// conservative: triangle inequality plus a roundoff bump per operation.
struct ComplexApprox {
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;

  ComplexApprox() = default;
  ComplexApprox(double r, double i, double e = 0.0) : re(r), im(i), err(e) {}
  explicit ComplexApprox(std::complex<double> z, double e = 0.0)
      : re(z.real()), im(z.imag()), err(e) {}

  std::complex<double> value() const { return {re, im}; }
  double abs() const { return std::hypot(re, im); }

  static double ulp_of(double magnitude) {
    return std::abs(magnitude) * std::numeric_limits<double>::epsilon();
  }

  ComplexApprox& operator+=(const ComplexApprox& o) {
    re += o.re;
    im += o.im;
    err += o.err + ulp_of(abs());
    return *this;
  }
  ComplexApprox& operator-=(const ComplexApprox& o) {
    re -= o.re;
    im -= o.im;
    err += o.err + ulp_of(abs());
    return *this;
  }

  friend ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b) {
    return a += b;
  }
  friend ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b) {
    return a -= b;
  }

  friend ComplexApprox operator*(const ComplexApprox& a,
                                 const ComplexApprox& b) {
    std::complex<double> v = a.value() * b.value();
    double e = a.abs() * b.err + b.abs() * a.err + a.err * b.err +
               4 * ulp_of(std::abs(v));
    return ComplexApprox(v, e);
  }

  friend ComplexApprox operator*(const ComplexApprox& a, double s) {
    return ComplexApprox(a.re * s, a.im * s,
                         a.err * std::abs(s) + 2 * ulp_of(a.abs() * s));
  }
  friend ComplexApprox operator*(double s, const ComplexApprox& a) {
    return a * s;
  }

  ComplexApprox conj() const { return ComplexApprox(re, -im, err); }

  // Distance ignoring error bounds.
  double deviation_from(const ComplexApprox& o) const {
    return std::abs(value() - o.value());
  }
};

// (-i)^k for integer k >= 0.
inline std::complex<double> minus_i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

}  // namespace lident

#endif
