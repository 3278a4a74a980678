#include "doctest.h"

#include "spinhecke/linalg.hpp"
#include "spinhecke/spin_hecke.hpp"
#include "spinhecke/verify.hpp"

#include <random>

using namespace spinhecke;

namespace {

Scalar v() { return Scalar::v(); }
const Scalar expected_trace = -(Scalar::v() - Scalar(1)).pow(4) * (Scalar::v() * Scalar::v() + Scalar(1));

}  // namespace

TEST_CASE("R elements") {
  AlgebraElement r1 = R_element({1}, 2);
  AlgebraElement expect = (AlgebraElement::c(2, 1) - AlgebraElement::c(2, 2)) * AlgebraElement::T(2, 1) +
                          (v() - Scalar(1)) * AlgebraElement::c(2, 2);
  CHECK(r1 == expect);
  CHECK(r1 == psi_R(2, 1));
  CHECK(R_element({1, 1}, 2) == -(v() * v() + Scalar(1)) * AlgebraElement::identity(2));
  CHECK(R_element({}, 3) == AlgebraElement::identity(3));
  CHECK_THROWS_AS(R_element({3}, 3), std::out_of_range);
}

TEST_CASE("the embedding respects the relations") {
  for (int n = 2; n <= 5; ++n) {
    Report r = verify_iso(n);
    CAPTURE(r.detail);
    CHECK(r.ok);
    for (const auto &rel : spin_relations(n)) {
      CAPTURE(rel.name);
      CHECK(evaluate(n, rel.combo).is_zero());
    }
    for (int i = 1; i < n; ++i) CHECK(phi_T(n, i) == AlgebraElement::T(n, i));
  }
}

TEST_CASE("spin gimel") {
  CHECK(gimel_minus({}, 3) == Scalar(1));
  CHECK(gimel_minus(w_gamma(Composition({3})).word, 3).is_zero());
  CHECK(gimel_minus({2, 1, 3, 2, 3, 1}, 4) == expected_trace);
  CHECK(gimel_minus({2, 1, 3, 2, 3, 1}, 4).to_string() == "-v^6+4*v^5-7*v^4+8*v^3-7*v^2+4*v-1");
  for (int n = 2; n <= 5; ++n)
    for (const auto &nu : odd_partitions(n))
      CHECK(gimel_minus(w_gamma(Composition(nu.parts())).word, n) == Scalar(nu.length() == n ? 1 : 0));
}

TEST_CASE("spin gimel vanishes on minimal-length representatives") {
  for (int n = 2; n <= 5; ++n)
    for (const auto &mu : enumerate_partitions(n)) {
      if (mu.length() == n) continue;
      auto reps = minimal_length_class_elements(mu);
      REQUIRE_FALSE(reps.empty());
      for (const auto &p : reps) {
        CHECK(p.cycle_type() == mu);
        CHECK(p.length() == n - mu.length());
        for (const auto &w : p.all_reduced_words()) CHECK(gimel_minus(w, n).is_zero());
      }
    }
}

TEST_CASE("spin class polynomials") {
  ClassVector f = spin_class_polynomials({2, 1, 3, 2, 3, 1}, 4);
  CHECK(f[Partition({1, 1, 1, 1})] == expected_trace);
  for (int n = 2; n <= 5; ++n)
    for (const auto &nu : odd_partitions(n)) {
      ClassVector e(n);
      e[nu] = Scalar(1);
      CHECK(spin_class_polynomials(w_gamma(Composition(nu.parts())).word, n) == e);
    }
  CHECK(spin_class_polynomials({1, 2, 1}, 3).is_zero());
  CHECK(spin_class_polynomials({1}, 4).is_zero());
  CHECK_THROWS_AS(spin_class_polynomials({4}, 4), std::out_of_range);
}

TEST_CASE("spin class polynomials reproduce spin characters") {
  std::mt19937_64 rng(19);
  for (int n = 3; n <= 4; ++n) {
    const CharacterTable &t = spin_character_table(n);
    std::uniform_int_distribution<int> idx(1, n - 1);
    for (int k = 0; k < 10; ++k) {
      Word w;
      for (int j = 0; j < 4; ++j) w.push_back(idx(rng));
      ClassVector f = spin_class_polynomials(w, n);
      auto chi = spin_character_values(w, n);
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        Scalar s;
        for (std::size_t c = 0; c < t.cols.size(); ++c) s += f.values()[c] * t.values[r][c];
        CHECK(s == chi[r]);
      }
    }
  }
}

TEST_CASE("spin Schur elements") {
  for (int n = 2; n <= 5; ++n)
    for (const auto &[lambda, c] : spin_schur_elements(n)) {
      const int k = n / 2;
      int e = n % 2 == 0 ? k : k + 1 - lambda.delta();
      CHECK(c == schur_element(lambda) / Scalar(2).pow(e));
      CHECK(c == spin_schur_from_ordinary(lambda));
    }
  CHECK(clifford_module_dim(4) == 4);
  CHECK(clifford_module_dim(5) == 8);
}

TEST_CASE("images of R_sigma are independent") {
  for (int n = 2; n <= 4; ++n) {
    auto perms = all_permutations(n);
    std::map<BasisTerm, std::size_t> cols;
    std::vector<AlgebraElement> rows;
    for (const auto &p : perms) {
      rows.push_back(R_element(p.reduced_word(), n));
      for (const auto &[t, c] : rows.back().terms()) cols.try_emplace(t, cols.size());
    }
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto &[t, c] : rows[r].terms()) m(r, cols.at(t)) = c;
    CHECK(rank(m) == perms.size());
  }
}
