#ifndef LIDENT_PI_ALGEBRA_HPP
#define LIDENT_PI_ALGEBRA_HPP

#include <map>
#include <string>

#include "lident/rational.hpp"

namespace lident {

// pi to 36 significant digits; the single source of the constant for all
// numeric conversions out of the exact layer.
inline constexpr long double kPi =
    3.14159265358979323846264338327950288L;

// Exact value sum_k r_k * pi^k, stored sparsely.  Zero coefficients are
// never kept.
class PiScalar {
 public:
  PiScalar() = default;
  explicit PiScalar(const Rational& constant) { set_term(0, constant); }
  PiScalar(unsigned pi_power, const Rational& coeff) {
    set_term(pi_power, coeff);
  }

  static PiScalar pi(unsigned power = 1) { return PiScalar(power, Rational(1)); }

  bool is_zero() const { return terms_.empty(); }

  Rational term(unsigned pi_power) const {
    auto it = terms_.find(pi_power);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<unsigned, Rational>& terms() const { return terms_; }

  PiScalar& operator+=(const PiScalar& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  PiScalar& operator-=(const PiScalar& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  PiScalar& operator*=(const Rational& r) {
    if (r == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= r;
    }
    return *this;
  }

  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(PiScalar a, const Rational& r) { return a *= r; }
  friend PiScalar operator*(const Rational& r, PiScalar a) { return a *= r; }

  friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
    PiScalar out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    return out;
  }

  friend bool operator==(const PiScalar& a, const PiScalar& b) {
    return a.terms_ == b.terms_;
  }

  double value() const {
    long double acc = 0.0L;
    long double p = 1.0L;
    unsigned last = 0;
    for (const auto& [k, c] : terms_) {
      for (; last < k; ++last) p *= kPi;
      acc += static_cast<long double>(to_double(c)) * p;
    }
    return static_cast<double>(acc);
  }

  std::string str() const;

 private:
  void set_term(unsigned k, const Rational& c) {
    if (c != 0) terms_[k] = c;
  }
  void add_term(unsigned k, const Rational& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<unsigned, Rational> terms_;
};

// Polynomial in x with PiScalar coefficients, sparse by degree.
class PiPoly {
 public:
  PiPoly() = default;
  explicit PiPoly(const PiScalar& constant) { set_coeff(0, constant); }

  static PiPoly monomial(unsigned degree, const PiScalar& c) {
    PiPoly p;
    p.set_coeff(degree, c);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
  }

  PiScalar coeff(unsigned degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? PiScalar() : it->second;
  }

  const std::map<unsigned, PiScalar>& coeffs() const { return coeffs_; }

  void set_coeff(unsigned degree, const PiScalar& c) {
    if (c.is_zero())
      coeffs_.erase(degree);
    else
      coeffs_[degree] = c;
  }

  PiPoly& operator+=(const PiPoly& o) {
    for (const auto& [d, c] : o.coeffs_) set_coeff(d, coeff(d) + c);
    return *this;
  }
  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }

  friend bool operator==(const PiPoly& a, const PiPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Formal d/dx.
  PiPoly derivative() const {
    PiPoly out;
    for (const auto& [d, c] : coeffs_) {
      if (d == 0) continue;
      out.set_coeff(d - 1, c * Rational(static_cast<long>(d)));
    }
    return out;
  }

  // Exact substitution x = r*pi.
  PiScalar eval_at_pi_multiple(const Rational& r) const {
    PiScalar out;
    for (const auto& [d, c] : coeffs_) {
      // c * r^d * pi^d
      PiScalar shifted;
      Rational rd = rational_pow(r, d);
      for (const auto& [k, v] : c.terms())
        shifted += PiScalar(k + d, v * rd);
      out += shifted;
    }
    return out;
  }

  std::string str() const;

 private:
  std::map<unsigned, PiScalar> coeffs_;
};

}  // namespace lident

#endif
