#include "doctest.h"

#include "spinhecke/traces.hpp"
#include "spinhecke/verify.hpp"

#include <random>

using namespace spinhecke;

TEST_CASE("standard basis reduces to unit vectors") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &nu : odd_partitions(n)) {
      ClassVector f = reduce(build_T_w(Composition(nu.parts())));
      ClassVector e(n);
      e[nu] = Scalar(1);
      CHECK(f == e);
    }
}

TEST_CASE("small reductions") {
  const Scalar half_vm1 = Scalar::parse("(v-1)/2");
  CHECK(reduce(AlgebraElement(2, {Permutation(2), clifford_set({1, 2})})).is_zero());
  ClassVector f = reduce(AlgebraElement::T(2, 1));
  CHECK(f[Partition({1, 1})] == half_vm1);
  CHECK(f_nu(AlgebraElement::T(2, 1), Partition({1, 1})) == half_vm1);
  CHECK(reduce(AlgebraElement::c(3, 2)).is_zero());
  CHECK_THROWS_AS(f[Partition({2})], std::out_of_range);
}

TEST_CASE("class polynomials are trace functions") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 60; ++k) {
      AlgebraElement a(n, random_basis_term(n, rng)), b(n, random_basis_term(n, rng));
      CHECK(reduce(a * b) == reduce(b * a));
    }
}

TEST_CASE("reduction is linear") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 30; ++k) {
    AlgebraElement a = random_element(4, rng, 4), b = random_element(4, rng, 4);
    Scalar s = Scalar::parse("v^2-3");
    CHECK(reduce(a + s * b) == reduce(a) + s * reduce(b));
  }
}

TEST_CASE("class polynomials lie in A on the full basis") {
  for (int n = 1; n <= 3; ++n)
    for (const auto &p : all_permutations(n))
      for (CliffordSet set = 0; set < (CliffordSet{1} << n); ++set)
        for (ClassVector f = reduce_term({p, set}); const auto &x : f.values()) CHECK(x.in_ring(Ring::A));
}

TEST_CASE("gimel on standard elements") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &mu : enumerate_partitions(n)) {
      Scalar expect = Scalar::parse("(v-1)/2").pow(n - mu.length());
      CHECK(gimel(build_T_w(Composition(mu.parts()))) == expect);
      if (mu.all_odd()) CHECK(gimel_on_standard(n, mu) == expect);
    }
}

TEST_CASE("gimel vanishes on odd elements and on nontrivial Clifford parts") {
  CHECK(gimel(AlgebraElement::c(3, 1)).is_zero());
  CHECK(gimel(AlgebraElement(3, {Permutation(3), clifford_set({1, 2})})).is_zero());
  CHECK(gimel(AlgebraElement::identity(4)) == Scalar(1));
}

TEST_CASE("conjugation by Clifford words and by T_i") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    AlgebraElement h(4, random_basis_term(4, rng));
    if (h.is_odd()) continue;
    for (int j = 1; j <= 4; ++j) {
      AlgebraElement c = AlgebraElement::c(4, j);
      CHECK(reduce(c * h * c) == reduce(h));
    }
    AlgebraElement t = AlgebraElement::T(4, 2);
    CHECK(reduce(t * h) == reduce(h * t));
  }
}
