#include <doctest.h>

#include <set>

#include "lident/characters.hpp"
#include "support/oracles.hpp"

using namespace lident;
using lident::testing::char_values_sum_to_zero;

TEST_CASE("group decomposition for small moduli") {
  CharacterGroup g4(4);
  CHECK(g4.totient() == 2);
  REQUIRE(g4.components().size() == 1);
  CHECK(g4.components()[0].generator == 3);
  CHECK(g4.components()[0].order == 2);

  CharacterGroup g5(5);
  CHECK(g5.totient() == 4);
  REQUIRE(g5.components().size() == 1);
  CHECK(g5.components()[0].generator == 2);
  CHECK(g5.components()[0].order == 4);

  CharacterGroup g12(12);
  CHECK(g12.totient() == 4);
  REQUIRE(g12.components().size() == 2);
  CHECK(g12.components()[0].order == 2);  // mod 4 part
  CHECK(g12.components()[1].order == 2);  // mod 3 part

  CharacterGroup g8(8);
  REQUIRE(g8.components().size() == 2);
  CHECK(g8.components()[0].generator == 8 - 1);
  CHECK(g8.components()[0].order == 2);
  CHECK(g8.components()[1].generator == 5);
  CHECK(g8.components()[1].order == 2);
}

TEST_CASE("character evaluation, known values") {
  CharacterGroup g4(4);
  DirichletCharacter chi4 = character_by_index(g4, 1);
  CHECK(chi4.eval(1).is_one());
  CHECK(chi4.eval(3) == CharValue::root(1, 2));
  CHECK(chi4.eval(2).zero);
  CHECK(chi4.eval(0).zero);
  CHECK(chi4.parity() == -1);

  CharacterGroup g5(5);
  DirichletCharacter chi5 = character_by_index(g5, 1);
  // order-4 character with chi(2) a primitive 4th root
  CHECK(chi5.order() == 4);
  CHECK(chi5.eval(2) == CharValue::root(1, 4));
  CHECK(chi5.eval(4) == CharValue::root(1, 2));
  CHECK(chi5.eval(3) == CharValue::root(3, 4));
  CHECK(chi5.parity() == -1);
}

TEST_CASE("index 0 is principal and indexing round-trips") {
  for (long q : {3, 4, 5, 8, 12, 15, 16, 24, 36, 40}) {
    CharacterGroup g(q);
    auto chars = enumerate_characters(g);
    REQUIRE(static_cast<long>(chars.size()) == g.totient());
    CHECK(chars[0].is_principal());
    for (long i = 0; i < g.totient(); ++i) {
      CHECK(chars[i].index() == i);
      CHECK(character_by_index(g, i).exponents() == chars[i].exponents());
    }
  }
}

TEST_CASE("multiplicativity, exhaustively for q <= 50") {
  for (long q = 3; q <= 50; ++q) {
    CharacterGroup g(q);
    for (const auto& chi : enumerate_characters(g)) {
      for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b) {
          CharValue lhs = chi.eval(a * b % q);
          CharValue rhs = chi.eval(a) * chi.eval(b);
          REQUIRE(lhs == rhs);
        }
    }
  }
}

TEST_CASE("orthogonality via exact root-of-unity reduction") {
  for (long q : {3, 4, 5, 7, 8, 9, 12, 15, 16, 21, 24}) {
    CharacterGroup g(q);
    auto chars = enumerate_characters(g);
    // sum over n of chi(n) vanishes unless chi is principal
    for (const auto& chi : chars) {
      std::vector<CharValue> vals;
      for (long n = 0; n < q; ++n) vals.push_back(chi.eval(n));
      bool zero = char_values_sum_to_zero(vals);
      CHECK(zero == !chi.is_principal());
    }
    // dual: sum over chi of chi(n) vanishes unless n = 1 mod q
    for (long n = 0; n < q; ++n) {
      std::vector<CharValue> vals;
      for (const auto& chi : chars) vals.push_back(chi.eval(n));
      bool zero = char_values_sum_to_zero(vals);
      CHECK(zero == (n % q != 1 % q));
    }
  }
}

TEST_CASE("parity partitions the dual group") {
  for (long q : {3, 4, 5, 8, 11, 12, 15, 16, 20, 21}) {
    CharacterGroup g(q);
    long even = 0, odd = 0;
    for (const auto& chi : enumerate_characters(g)) {
      int p = chi.parity();
      REQUIRE((p == 1 || p == -1));
      (p == 1 ? even : odd) += 1;
      // parity matches chi(q-1) directly
      CharValue v = chi.eval(q - 1);
      REQUIRE(!v.zero);
      CHECK(p == (v.is_one() ? 1 : -1));
    }
    if (q > 2) CHECK(even == odd);  // half each for q > 2
    CHECK(even + odd == g.totient());
  }
}

TEST_CASE("conductor and primitivity") {
  CharacterGroup g4(4);
  CHECK(character_by_index(g4, 0).conductor() == 1);
  CHECK(character_by_index(g4, 1).conductor() == 4);
  CHECK(character_by_index(g4, 1).is_primitive());

  // mod 8 characters: principal has conductor 1; the one induced by the
  // mod-4 character has conductor 4
  CharacterGroup g8(8);
  std::multiset<long> conductors;
  for (const auto& chi : enumerate_characters(g8))
    conductors.insert(chi.conductor());
  CHECK(conductors == std::multiset<long>{1, 4, 8, 8});

  // prime modulus: every nonprincipal character is primitive
  CharacterGroup g11(11);
  for (const auto& chi : enumerate_characters(g11))
    CHECK(chi.conductor() == (chi.is_principal() ? 1 : 11));
}

TEST_CASE("conjugate character") {
  CharacterGroup g5(5);
  DirichletCharacter chi = character_by_index(g5, 1);
  DirichletCharacter bar = chi.conjugate();
  for (long n = 0; n < 5; ++n) {
    CharValue v = chi.eval(n), w = bar.eval(n);
    CHECK(v.zero == w.zero);
    if (!v.zero) {
      CharValue prod = v * w;
      CHECK(prod.is_one());
    }
  }
  CHECK(bar.conjugate().index() == chi.index());
}

TEST_CASE("character value arithmetic") {
  CharValue a = CharValue::root(1, 4);
  CharValue b = CharValue::root(1, 2);
  CHECK(a * b == CharValue::root(3, 4));
  CHECK((a * CharValue::zero_value()).zero);
  CHECK(CharValue::root(2, 4) == CharValue::root(1, 2));  // canonicalized
  auto z = a.to_complex();
  CHECK(z.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(z.imag() == doctest::Approx(1.0).epsilon(1e-15));
}
