#include "doctest.h"

#include "oracles.hpp"
#include "spinhecke/tensor_oracle.hpp"
#include "spinhecke/verify.hpp"

#include <random>

using namespace spinhecke;

namespace {

Scalar v() { return Scalar::v(); }

TensorVector basis(std::vector<int> t) { return {{TensorIndex(std::move(t)), Scalar(1)}}; }

}  // namespace

TEST_CASE("S-bar on small vectors") {
  TensorSpace sp(2, 2);
  TensorVector a = sp.apply(Generator::T(1), basis({1, 1}));
  CHECK(a == TensorVector{{{1, 1}, v()}, {{-1, -1}, v() - Scalar(1)}});
  CHECK(sp.apply(Generator::T(1), basis({-1, -1})) == TensorVector{{{-1, -1}, Scalar(-1)}});
}

TEST_CASE("S-bar equals Q S built from the definitions") {
  for (int m = 1; m <= 3; ++m) {
    TensorSpace sp(m, 2);
    for (int k = -m; k <= m; ++k)
      for (int l = -m; l <= m; ++l) {
        if (!k || !l) continue;
        TensorVector got = sp.apply(Generator::T(1), basis({k, l}));
        TensorVector want;
        for (const auto &[ab, c] : oracle::sbar_from_definitions(k, l, m)) want[{ab.first, ab.second}] = c;
        CAPTURE(k);
        CAPTURE(l);
        CHECK(got == want);
      }
  }
}

TEST_CASE("Theta") {
  TensorSpace sp(1, 1);
  CHECK(sp.apply(Generator::c(1), basis({1})) == TensorVector{{{-1}, Scalar::i()}});
  CHECK(sp.apply(Generator::c(1), basis({-1})) == TensorVector{{{1}, -Scalar::i()}});
  TensorSpace sp2(1, 2);
  // Koszul sign from an odd first factor
  CHECK(sp2.apply(Generator::c(2), basis({-1, 1})) == TensorVector{{{-1, -1}, -Scalar::i()}});
  CHECK_THROWS_AS(sp2.apply(Generator::c(3), basis({1, 1})), std::out_of_range);
}

TEST_CASE("weight traces") {
  CHECK(TensorSpace(1, 1).weight_trace(AlgebraElement::identity(1), {1}) == Scalar(2));
  CHECK(TensorSpace(2, 2).weight_trace(AlgebraElement::T(2, 1), {1, 1}) == Scalar(4) * (v() - Scalar(1)));
  TensorSpace sp(2, 3);
  for (const auto &w : std::vector<std::vector<int>>{{3, 0}, {2, 1}, {1, 2}})
    CHECK(sp.weight_trace(AlgebraElement::c(3, 1), w).is_zero());
}

TEST_CASE("traces of standard elements") {
  for (int n = 1; n <= 4; ++n) {
    TensorSpace sp(n, n);
    SymPoly t = sp.trace_poly(build_T_w(Composition({n})));
    CHECK(t == g_tilde_row(n, n));
    for (const auto &mu : enumerate_partitions(n)) {
      Scalar expect = delta(mu) * (v() - Scalar(1)).pow(mu.length() - 1);
      CHECK(t.coefficient(mu) == expect);
    }
    CHECK(statistic_trace(n, n) == t);
  }
  // multiplicativity over blocks
  TensorSpace sp(4, 4);
  CHECK(sp.trace_poly(build_T_w(Composition({2, 1, 1}))) == g_tilde(Partition({2, 1, 1}), 4));
  CHECK(sp.trace_poly(build_T_w(Composition({1, 2, 1}))) == g_tilde(Partition({2, 1, 1}), 4));
}

TEST_CASE("oracle tables") {
  for (int n = 1; n <= 4; ++n) CHECK(oracle_characters(n) == character_table(n));
}

TEST_CASE("the action is a representation") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 3; ++n) {
    TensorSpace sp(n, n);
    for (int k = 0; k < 15; ++k) {
      AlgebraElement a = random_element(n, rng, 2), b = random_element(n, rng, 2);
      TensorVector x = sp.random_vector(rng, 3);
      CHECK(sp.apply(a * b, x) == sp.apply(a, sp.apply(b, x)));
    }
  }
}

TEST_CASE("relations kill random vectors") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    TensorSpace sp(n, n);
    auto rels = hecke_clifford_relations(n);
    for (int k = 0; k < 50; ++k) {
      TensorVector x = sp.random_vector(rng, 3);
      for (const auto &r : rels) {
        CAPTURE(r.name);
        CHECK(evaluate(sp, r.combo, x).empty());
      }
    }
  }
}
