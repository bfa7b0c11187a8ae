#ifndef LIDENT_GAUSS_HPP
#define LIDENT_GAUSS_HPP

#include <complex>
#include <vector>

#include "lident/characters.hpp"
#include "lident/complex_approx.hpp"

namespace lident {

// e^{2 pi i k / q} for k = 0..q-1.
std::vector<std::complex<double>> roots_of_unity(long q);

// G(z, chi) = sum_{k=0}^{q-1} chi(k) e^{2 pi i k z / q}.
ComplexApprox gauss_sum(const DirichletCharacter& chi, long z);

struct GaussTable {
  long q = 0;
  long chi_index = 0;
  std::vector<ComplexApprox> values;  // j = 1..q at index j-1

  const ComplexApprox& at(long j) const { return values.at(j - 1); }
};

// Serial reference.
GaussTable gauss_table(const DirichletCharacter& chi);
// Same result, rows computed in parallel.
GaussTable gauss_table_parallel(const DirichletCharacter& chi);

// max_j |G(j,chi) - conj(chi(j)) G(1,chi)|; small iff chi is primitive.
double check_separability(const DirichletCharacter& chi);

}  // namespace lident

#endif
