#include "lident/characters.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lident/pi_algebra.hpp"

namespace lident {

CharValue CharValue::root(long num, long den) {
  if (den <= 0) throw std::invalid_argument("CharValue: den must be positive");
  num %= den;
  if (num < 0) num += den;
  long g = std::gcd(num, den);
  if (num == 0) g = den;
  return CharValue{false, num / g, den / g};
}

std::complex<double> CharValue::to_complex() const {
  if (zero) return {0.0, 0.0};
  long double angle = 2.0L * kPi * num / den;
  return {static_cast<double>(std::cos(angle)),
          static_cast<double>(std::sin(angle))};
}

ComplexApprox CharValue::to_approx() const {
  return ComplexApprox(to_complex(), zero ? 0.0 : 4e-16);
}

CharValue operator*(const CharValue& a, const CharValue& b) {
  if (a.zero || b.zero) return CharValue::zero_value();
  long den = std::lcm(a.den, b.den);
  return CharValue::root(a.num * (den / a.den) + b.num * (den / b.den), den);
}

CharacterGroup::CharacterGroup(long q) : q_(q) {
  if (q < 3) throw std::domain_error("CharacterGroup: q must be >= 3");
  fq_ = factorize(q);
  phi_ = lident::totient(fq_);

  for (auto [p, e] : fq_.factors) {
    long m = 1;
    for (int i = 0; i < e; ++i) m *= p;
    if (p == 2) {
      if (e == 1) continue;  // trivial unit group
      if (e == 2) {
        comps_.push_back({4, 3, 2});
        std::vector<long> dl(4, -1);
        dl[1] = 0;
        dl[3] = 1;
        dlogs_.push_back(std::move(dl));
      } else {
        long half_order = m / 4;  // 2^{e-2}
        std::vector<long> dl_sign(m, -1), dl_five(m, -1);
        long v = 1;
        for (long b = 0; b < half_order; ++b) {
          dl_sign[v] = 0;
          dl_five[v] = b;
          dl_sign[m - v] = 1;
          dl_five[m - v] = b;
          v = v * 5 % m;
        }
        comps_.push_back({m, m - 1, 2});
        dlogs_.push_back(std::move(dl_sign));
        comps_.push_back({m, 5, half_order});
        dlogs_.push_back(std::move(dl_five));
      }
    } else {
      long g = primitive_root(p, e);
      long order = (p - 1) * (m / p);
      std::vector<long> dl(m, -1);
      long v = 1;
      for (long t = 0; t < order; ++t) {
        dl[v] = t;
        v = v * g % m;
      }
      comps_.push_back({m, g, order});
      dlogs_.push_back(std::move(dl));
    }
  }
}

bool CharacterGroup::is_unit(long n) const {
  n %= q_;
  if (n < 0) n += q_;
  return std::gcd(n, q_) == 1;
}

long CharacterGroup::dlog(std::size_t i, long n) const {
  n %= q_;
  if (n < 0) n += q_;
  return dlogs_[i][n % comps_[i].modulus];
}

DirichletCharacter::DirichletCharacter(const CharacterGroup& group,
                                       std::vector<long> exponents)
    : group_(&group), exps_(std::move(exponents)) {
  const auto& comps = group.components();
  if (exps_.size() != comps.size())
    throw std::invalid_argument("DirichletCharacter: exponent vector size");
  index_ = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (exps_[i] < 0 || exps_[i] >= comps[i].order)
      throw std::invalid_argument("DirichletCharacter: exponent out of range");
    index_ = index_ * comps[i].order + exps_[i];
  }
}

CharValue DirichletCharacter::eval(long n) const {
  if (!group_->is_unit(n)) return CharValue::zero_value();
  const auto& comps = group_->components();
  long den = 1;
  for (const auto& c : comps) den = std::lcm(den, c.order);
  long num = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    long t = group_->dlog(i, n);
    num = (num + exps_[i] * t % comps[i].order * (den / comps[i].order)) % den;
  }
  return CharValue::root(num, den);
}

bool DirichletCharacter::is_principal() const { return index_ == 0; }

long DirichletCharacter::order() const {
  const auto& comps = group_->components();
  long ord = 1;
  for (std::size_t i = 0; i < comps.size(); ++i)
    ord = std::lcm(ord, comps[i].order / std::gcd(exps_[i], comps[i].order));
  return ord;
}

int DirichletCharacter::parity() const {
  CharValue v = eval(modulus() - 1);
  return v.is_one() ? +1 : -1;
}

long DirichletCharacter::conductor() const {
  long q = modulus();
  for (long f = 1; f <= q; ++f) {
    if (q % f != 0) continue;
    bool induced = true;
    for (long a = 1; a <= q && induced; a += f)
      if (group_->is_unit(a) && !eval(a).is_one()) induced = false;
    if (induced) return f;
  }
  return q;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  const auto& comps = group_->components();
  std::vector<long> inv(exps_.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    inv[i] = exps_[i] == 0 ? 0 : comps[i].order - exps_[i];
  return DirichletCharacter(*group_, std::move(inv));
}

std::vector<DirichletCharacter> enumerate_characters(const CharacterGroup& g) {
  std::vector<DirichletCharacter> chars;
  chars.reserve(g.character_count());
  const auto& comps = g.components();
  std::vector<long> exps(comps.size(), 0);
  while (true) {
    chars.emplace_back(g, exps);
    // lexicographic increment, last component fastest
    std::size_t i = comps.size();
    while (i > 0) {
      --i;
      if (++exps[i] < comps[i].order) break;
      exps[i] = 0;
      if (i == 0) return chars;
    }
    if (comps.empty()) return chars;  // q with trivial unit group cannot occur
  }
}

DirichletCharacter character_by_index(const CharacterGroup& g, long index) {
  if (index < 0 || index >= g.character_count())
    throw std::out_of_range("character index out of range");
  const auto& comps = g.components();
  std::vector<long> exps(comps.size(), 0);
  for (std::size_t i = comps.size(); i-- > 0;) {
    exps[i] = index % comps[i].order;
    index /= comps[i].order;
  }
  return DirichletCharacter(g, std::move(exps));
}

}  // namespace lident
