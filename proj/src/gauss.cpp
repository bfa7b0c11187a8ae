#include "lident/gauss.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lident/pi_algebra.hpp"

namespace lident {

namespace {

// One Gauss-sum row from precomputed character values and phases,
// indexing phases by kz mod q.
ComplexApprox gauss_row(const std::vector<std::complex<double>>& chi_values,
                        const std::vector<std::complex<double>>& roots,
                        long q, long z) {
  z %= q;
  if (z < 0) z += q;
  std::complex<double> acc{0.0, 0.0};
  long idx = 0;
  for (long k = 0; k < q; ++k) {
    const auto& c = chi_values[k];
    if (c.real() != 0.0 || c.imag() != 0.0) acc += c * roots[idx];
    idx += z;
    if (idx >= q) idx -= q;
  }
  return ComplexApprox(acc, 4e-16 * static_cast<double>(q));
}

std::vector<std::complex<double>> character_values(
    const DirichletCharacter& chi) {
  long q = chi.modulus();
  std::vector<std::complex<double>> vals(q);
  for (long k = 0; k < q; ++k) vals[k] = chi.eval(k).to_complex();
  return vals;
}

}  // namespace

std::vector<std::complex<double>> roots_of_unity(long q) {
  std::vector<std::complex<double>> roots(q);
  for (long k = 0; k < q; ++k) {
    long double angle = 2.0L * kPi * k / q;
    roots[k] = {static_cast<double>(std::cos(angle)),
                static_cast<double>(std::sin(angle))};
  }
  return roots;
}

ComplexApprox gauss_sum(const DirichletCharacter& chi, long z) {
  long q = chi.modulus();
  return gauss_row(character_values(chi), roots_of_unity(q), q, z);
}

GaussTable gauss_table(const DirichletCharacter& chi) {
  long q = chi.modulus();
  GaussTable t{q, chi.index(), std::vector<ComplexApprox>(q)};
  auto chiv = character_values(chi);
  auto roots = roots_of_unity(q);
  for (long j = 1; j <= q; ++j) t.values[j - 1] = gauss_row(chiv, roots, q, j);
  return t;
}

GaussTable gauss_table_parallel(const DirichletCharacter& chi) {
  long q = chi.modulus();
  GaussTable t{q, chi.index(), std::vector<ComplexApprox>(q)};
  auto chiv = character_values(chi);
  auto roots = roots_of_unity(q);
#pragma omp parallel for schedule(static)
  for (long j = 1; j <= q; ++j) t.values[j - 1] = gauss_row(chiv, roots, q, j);
  return t;
}

double check_separability(const DirichletCharacter& chi) {
  GaussTable t = gauss_table(chi);
  std::complex<double> g1 = t.at(1).value();
  double worst = 0.0;
  for (long j = 1; j <= t.q; ++j) {
    std::complex<double> expected =
        std::conj(chi.eval(j).to_complex()) * g1;
    worst = std::max(worst, std::abs(t.at(j).value() - expected));
  }
  return worst;
}

}  // namespace lident
