#include "doctest.h"

#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/verify.hpp"

#include <random>

using namespace spinhecke;

namespace {

using G = Generator;

Permutation s(int n, int i) { return Permutation(n).times_s(i); }

}  // namespace

TEST_CASE("generator words") {
  const Scalar v = Scalar::v(), vm1 = v - Scalar(1);
  AlgebraElement t1t1 = from_word(2, {G::T(1), G::T(1)});
  AlgebraElement expect(2, {s(2, 1), 0}, vm1);
  expect.add_term({Permutation(2), 0}, v);
  CHECK(t1t1 == expect);

  AlgebraElement t1c1 = from_word(2, {G::T(1), G::c(1)});
  CHECK(t1c1 == AlgebraElement(2, {s(2, 1), clifford_bit(1)}));
  CHECK(from_word(2, {G::c(2), G::T(1)}) == t1c1);

  AlgebraElement t1c2 = from_word(2, {G::T(1), G::c(2)});
  AlgebraElement rhs = from_word(2, {G::c(1), G::T(1)}) + vm1 * AlgebraElement::c(2, 2) - vm1 * AlgebraElement::c(2, 1);
  CHECK(t1c2 == rhs);

  CHECK_THROWS_AS(from_word(2, {G::T(2)}), std::out_of_range);
  CHECK_THROWS_AS(from_word(2, {G::c(3)}), std::out_of_range);
}

TEST_CASE("products") {
  CHECK(AlgebraElement::c(3, 1) * AlgebraElement::c(3, 1) == AlgebraElement::identity(3));
  CHECK(AlgebraElement::c(3, 2) * AlgebraElement::c(3, 1) ==
        AlgebraElement(3, {Permutation(3), clifford_set({1, 2})}, Scalar(-1)));
  CHECK((from_word(3, {G::T(1), G::T(2), G::T(1)}) - from_word(3, {G::T(2), G::T(1), G::T(2)})).is_zero());
  CHECK_THROWS_WITH_AS(AlgebraElement::identity(2) * AlgebraElement::identity(3), "rank mismatch",
                       std::invalid_argument);
}

TEST_CASE("standard elements") {
  CHECK(build_T_w(Composition({1, 1, 1})) == AlgebraElement::identity(3));
  CHECK(build_T_w(Composition({3})) == from_word(3, {G::T(1), G::T(2)}));
  AlgebraElement t22 = build_T_w(Composition({2, 2}));
  CHECK(t22 == from_word(4, {G::T(1), G::T(3)}));
  CHECK(t22.terms().begin()->first.sigma.one_line() == std::vector<int>{2, 1, 4, 3});
}

TEST_CASE("Clifford inverses") {
  CHECK(inverse_of_clifford_word(2, {1}) == AlgebraElement::c(2, 1));
  CHECK(inverse_of_clifford_word(2, {1, 2}) == AlgebraElement(2, {Permutation(2), clifford_set({1, 2})}, Scalar(-1)));
  CHECK(inverse_of_clifford_word(4, {1, 2, 3, 4}) == AlgebraElement(4, {Permutation(4), clifford_set({1, 2, 3, 4})}));
  for (int n = 1; n <= 5; ++n)
    for (CliffordSet set = 0; set < (CliffordSet{1} << n); ++set) {
      auto idx = clifford_indices(set);
      AlgebraElement c(n, {Permutation(n), set});
      CHECK(c * inverse_of_clifford_word(n, idx) == AlgebraElement::identity(n));
    }
}

TEST_CASE("defining relations vanish in normal form") {
  for (int n = 1; n <= 5; ++n)
    for (const auto &r : hecke_clifford_relations(n)) {
      CAPTURE(r.name);
      CHECK(evaluate(n, r.combo).is_zero());
    }
}

TEST_CASE("associativity and left/right agreement") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 20; ++k) {
      AlgebraElement a = random_element(n, rng, 3), b = random_element(n, rng, 2), c = random_element(n, rng, 2);
      CHECK((a * b) * c == a * (b * c));
      for (int i = 1; i < n; ++i)
        CHECK(multiply_left(G::T(i), a) == AlgebraElement::T(n, i) * a);
    }
}

TEST_CASE("basis terms multiply to their normal form") {
  // T_sigma C_I is the product of a reduced word for sigma and the sorted c's
  for (const auto &p : all_permutations(3))
    for (CliffordSet set = 0; set < 8; ++set) {
      GeneratorWord w;
      for (int i : p.reduced_word()) w.push_back(G::T(i));
      for (int k : clifford_indices(set)) w.push_back(G::c(k));
      CHECK(from_word(3, w) == AlgebraElement(3, {p, set}));
    }
}

TEST_CASE("element parser") {
  AlgebraElement e = parse_element(4, "(v-1)/2 * T1 T2 c1 c3 + c2");
  AlgebraElement expect = from_word(4, {G::T(1), G::T(2), G::c(1), G::c(3)}, Scalar::parse("(v-1)/2")) +
                          AlgebraElement::c(4, 2);
  CHECK(e == expect);
  CHECK(parse_element(2, "T1") == AlgebraElement::T(2, 1));
  CHECK(parse_element(2, "-T1*c1 + 3") == Scalar(-1) * from_word(2, {G::T(1), G::c(1)}) + Scalar(3) * AlgebraElement::identity(2));
  try {
    parse_element(2, "T1 + T5");
    FAIL("no throw");
  } catch (const ParseError &e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_element(2, "T1 ++ c1"), ParseError);
}
