#include "doctest.h"

#include "oracles.hpp"
#include "spinhecke/characters.hpp"
#include "spinhecke/linalg.hpp"
#include "spinhecke/traces.hpp"

using namespace spinhecke;

namespace {

Scalar v() { return Scalar::v(); }

}  // namespace

TEST_CASE("small tables") {
  const CharacterTable &t2 = character_table(2);
  CHECK(t2.at(Partition({2}), Partition({1, 1})) == Scalar(4));
  const CharacterTable &t3 = character_table(3);
  CHECK(t3.at(Partition({3}), Partition({3})) == Scalar::parse("2*v^2-2*v+2"));
  CHECK(t3.at(Partition({2, 1}), Partition({3})) == Scalar(-2) * v());
  CHECK(t3.rows == enumerate_partitions(3, PartitionKind::Strict));
  CHECK(t3.cols == enumerate_partitions(3, PartitionKind::Odd));
}

TEST_CASE("character values") {
  CHECK(character_value(Partition({2}), AlgebraElement::T(2, 1)) == Scalar(2) * (v() - Scalar(1)));
  for (int n = 2; n <= 4; ++n) {
    const CharacterTable &t = character_table(n);
    for (const auto &lambda : t.rows) {
      CHECK(character_value(lambda, AlgebraElement::c(n, 1)).is_zero());
      for (const auto &nu : t.cols)
        CHECK(character_value(lambda, build_T_w(Composition(nu.parts()))) == t.at(lambda, nu));
    }
  }
}

TEST_CASE("table at v = 1 is the table built from 2 p_r") {
  for (int n = 2; n <= 5; ++n) {
    const CharacterTable &t = character_table(n);
    std::vector<SymPoly> traces;
    for (const auto &nu : t.cols) {
      SymPoly f = SymPoly::one(n);
      for (int r : nu.parts()) f = f * (Scalar(2) * power_sum(r, n));
      traces.push_back(f);
    }
    CharacterTable classical = table_from_traces(n, traces);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      for (std::size_t c = 0; c < t.cols.size(); ++c)
        CHECK(Scalar(t.values[r][c].specialize(GaussRational(1))) == classical.values[r][c]);
  }
}

TEST_CASE("table invertible with entries in Q(v)") {
  for (int n = 1; n <= 6; ++n) {
    const CharacterTable &t = character_table(n);
    Matrix m(t.rows.size(), t.cols.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      for (std::size_t c = 0; c < t.cols.size(); ++c) {
        CHECK(t.values[r][c].in_ring(Ring::Qv));
        m(r, c) = t.values[r][c];
      }
    CHECK_FALSE(determinant(m).is_zero());
  }
}

TEST_CASE("Schur elements and generic degrees") {
  CHECK(schur_element(Partition({2})) == Scalar(2));
  CHECK(generic_degree(Partition({2})) == Scalar(2) * (v() + Scalar(1)));
  CHECK(poincare(2) == Scalar(1) + v());
  for (int n = 1; n <= 6; ++n) {
    mpq_class total = 0;
    for (const auto &lambda : enumerate_partitions(n, PartitionKind::Strict)) {
      Scalar d = generic_degree(lambda);
      CHECK(d.is_polynomial());
      CHECK(d * schur_element(lambda) == Scalar(2).pow(n) * poincare(n));
      ShiftedData sd = shifted_data(lambda);
      long hooks = 1;
      for (const auto &row : sd.hooks)
        for (int h : row) hooks *= h;
      mpq_class at1 = d.specialize(GaussRational(1)).re;
      int e = n - (lambda.length() - lambda.delta()) / 2;
      CHECK(at1 == oracle::ratio(oracle::factorial(n) << e, hooks));
      mpq_class sq = at1 * at1;
      total += lambda.delta() ? mpq_class(sq / 2) : sq;
      SchurDegreeData sdd = schur_data(lambda);
      CHECK(sdd.u * Scalar(2).pow(lambda.delta()) * sdd.schur_element == Scalar(1));
    }
    CHECK(total == mpq_class(oracle::factorial(n) << n));
  }
}

TEST_CASE("gimel decomposes over Schur elements") {
  for (int n = 1; n <= 5; ++n) {
    Report r = verify_gimel_decomposition(n);
    CAPTURE(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("Frobenius values on non-odd classes agree with reduction") {
  for (int n = 2; n <= 5; ++n) {
    const CharacterTable &t = character_table(n);
    for (const auto &mu : enumerate_partitions(n)) {
      auto direct = characters_on_standard(mu);
      auto via = character_values(build_T_w(Composition(mu.parts())));
      for (std::size_t r = 0; r < t.rows.size(); ++r) CHECK(direct.at(t.rows[r]) == via[r]);
    }
  }
}
