#ifndef LIDENT_CHARACTERS_HPP
#define LIDENT_CHARACTERS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "lident/complex_approx.hpp"
#include "lident/intmath.hpp"

namespace lident {

// Exact character value: zero, or the root of unity e^{2 pi i num/den}
// with 0 <= num < den and gcd(num, den) = 1.
struct CharValue {
  bool zero = true;
  long num = 0;
  long den = 1;

  static CharValue root(long num, long den);
  static CharValue zero_value() { return CharValue{}; }

  bool is_one() const { return !zero && num == 0; }
  std::complex<double> to_complex() const;
  ComplexApprox to_approx() const;

  friend bool operator==(const CharValue&, const CharValue&) = default;
};

CharValue operator*(const CharValue& a, const CharValue& b);

// The unit group (Z/q)^* decomposed into cyclic components with
// precomputed discrete-log tables.  Component order: ascending primes;
// for 2^e with e >= 3 the order-2 part generated by -1 precedes the
// 2^{e-2} part generated by 5.
class CharacterGroup {
 public:
  struct Component {
    long modulus;    // the prime power p^e this component lives in
    long generator;  // generator of the cyclic piece
    long order;
  };

  explicit CharacterGroup(long q);

  long modulus() const { return q_; }
  long totient() const { return phi_; }
  const Factorization& factorization() const { return fq_; }
  const std::vector<Component>& components() const { return comps_; }
  long character_count() const { return phi_; }

  bool is_unit(long n) const;
  // Exponent of the unit residue n in component i.
  long dlog(std::size_t i, long n) const;

 private:
  long q_;
  Factorization fq_;
  long phi_;
  std::vector<Component> comps_;
  // dlogs_[i] indexed by residue mod comps_[i].modulus; -1 for non-units.
  std::vector<std::vector<long>> dlogs_;
};

class DirichletCharacter {
 public:
  DirichletCharacter(const CharacterGroup& group, std::vector<long> exponents);

  const CharacterGroup& group() const { return *group_; }
  long modulus() const { return group_->modulus(); }
  const std::vector<long>& exponents() const { return exps_; }
  // Lexicographic rank of the exponent vector; 0 is principal.
  long index() const { return index_; }

  CharValue eval(long n) const;
  bool is_principal() const;
  // Order of the character in the dual group.
  long order() const;
  // +1 (even) or -1 (odd), the sign of chi(-1).
  int parity() const;
  // Smallest f | q inducing chi; chi primitive iff f == q.
  long conductor() const;
  bool is_primitive() const { return conductor() == modulus(); }
  DirichletCharacter conjugate() const;

 private:
  const CharacterGroup* group_;
  std::vector<long> exps_;
  long index_;
};

// All phi(q) characters in canonical index order.
std::vector<DirichletCharacter> enumerate_characters(const CharacterGroup& g);

DirichletCharacter character_by_index(const CharacterGroup& g, long index);

}  // namespace lident

#endif
