#include "doctest.h"

#include "oracles.hpp"
#include "spinhecke/symfunc.hpp"

using namespace spinhecke;

namespace {

Scalar v() { return Scalar::v(); }
Scalar P(const char *s) { return Scalar::parse(s); }

}  // namespace

TEST_CASE("monomials and products") {
  auto m1 = SymPoly::monomial(Partition({1}), 2);
  CHECK(m1.expanded() == std::map<std::vector<int>, Scalar>{{{1, 0}, Scalar(1)}, {{0, 1}, Scalar(1)}});
  auto m2m1 = SymPoly::monomial(Partition({2}), 3) * SymPoly::monomial(Partition({1}), 3);
  CHECK(m2m1.coefficient(Partition({3})) == Scalar(1));
  CHECK(m2m1.coefficient(Partition({2, 1})) == Scalar(1));
  CHECK(m2m1.coefficient(Partition({1, 1, 1})).is_zero());
  auto m11sq = SymPoly::monomial(Partition({1, 1}), 4) * SymPoly::monomial(Partition({1, 1}), 4);
  CHECK(m11sq.coefficient(Partition({1, 1, 1, 1})) == Scalar(6));
  CHECK(m11sq.coefficient(Partition({2, 1, 1})) == Scalar(2));
  CHECK_THROWS_WITH_AS(SymPoly::monomial(Partition({1, 1, 1}), 2), "too few variables", std::invalid_argument);
  CHECK_THROWS_AS(SymPoly::from_exponents(2, {{{1, 0}, Scalar(1)}}), std::invalid_argument);
}

TEST_CASE("products agree with expanded multiplication") {
  const int m = 3;
  for (const auto &a : enumerate_partitions(2))
    for (const auto &b : enumerate_partitions(3)) {
      auto fa = SymPoly::monomial(a, m), fb = SymPoly::monomial(b, m);
      std::map<std::vector<int>, Scalar> prod;
      for (const auto &[ea, ca] : fa.expanded())
        for (const auto &[eb, cb] : fb.expanded()) {
          std::vector<int> e(m);
          for (int k = 0; k < m; ++k) e[k] = ea[k] + eb[k];
          prod[e] += ca * cb;
        }
      CHECK((fa * fb).expanded() == prod);
    }
}

TEST_CASE("Delta") {
  CHECK(delta(1) == Scalar(2));
  CHECK(delta(2) == Scalar(2) * (v() - Scalar(1)));
  CHECK(delta(3) == Scalar(2) * (v() * v() - v() + Scalar(1)));
  CHECK(delta(Partition({2, 1})) == delta(2) * delta(1));
}

TEST_CASE("q_r matches the generating product") {
  for (int m = 1; m <= 4; ++m)
    for (int r = 1; r <= 5; ++r)
      CHECK(q_function(r, m).expanded() == oracle::product_coefficient(oracle::q_factor(r), r, m));
}

TEST_CASE("g~_r matches the generating product") {
  for (int m = 1; m <= 4; ++m)
    for (int r = 1; r <= 5; ++r) {
      auto g = oracle::product_coefficient(oracle::g_factor(r), r, m);
      for (auto &[e, c] : g) c /= v() - Scalar(1);
      CHECK(g_tilde_row(r, m).expanded() == g);
    }
}

TEST_CASE("g~ examples") {
  CHECK(g_tilde_row(1, 2) == Scalar(2) * SymPoly::monomial(Partition({1}), 2));
  auto g2 = g_tilde_row(2, 2);
  CHECK(g2.coefficient(Partition({2})) == Scalar(2) * (v() - Scalar(1)));
  CHECK(g2.coefficient(Partition({1, 1})) == Scalar(4) * (v() - Scalar(1)));
  CHECK_THROWS_AS(g_tilde(Partition({2, 1}), 2), std::invalid_argument);
  // v = 1 gives 2 p_r for odd r and 0 for even r
  for (int r = 1; r <= 5; ++r) {
    auto g = g_tilde_row(r, 5);
    SymPoly expect = r % 2 ? Scalar(2) * power_sum(r, 5) : SymPoly(5, r);
    for (const auto &mu : enumerate_partitions(r))
      CHECK(Scalar(g.coefficient(mu).specialize(GaussRational(1))) == expect.coefficient(mu));
  }
}

TEST_CASE("Schur Q-functions") {
  CHECK(schur_q(Partition({1}), 3) == Scalar(2) * SymPoly::monomial(Partition({1}), 3));
  CHECK(schur_q(Partition({2}), 3) ==
        Scalar(2) * SymPoly::monomial(Partition({2}), 3) + Scalar(4) * SymPoly::monomial(Partition({1, 1}), 3));
  CHECK(schur_q(Partition({2, 1}), 3) ==
        Scalar(4) * SymPoly::monomial(Partition({2, 1}), 3) + Scalar(8) * SymPoly::monomial(Partition({1, 1, 1}), 3));
  CHECK_THROWS_AS(schur_q(Partition({1, 1}), 3), std::invalid_argument);
  for (int n = 1; n <= 6; ++n)
    for (const auto &lambda : enumerate_partitions(n, PartitionKind::Strict))
      for (SymPoly q = schur_q(lambda, n); const auto &[mu, c] : q.coeffs()) {
        CHECK(c.is_polynomial());
        CHECK(c.num().degree() == 0);
        mpq_class k = c.specialize(GaussRational(0)).re;
        CHECK(k > 0);
        CHECK(k.get_den() == 1);
        CHECK(k.get_num() % 2 == 0);
      }
}

TEST_CASE("Q-expansion") {
  auto a = expand_in_Q(schur_q(Partition({2, 1}), 3));
  CHECK(a.at(Partition({2, 1})) == Scalar(1));
  CHECK((a.count(Partition({3})) == 0 || a.at(Partition({3})).is_zero()));
  auto b = expand_in_Q(g_tilde(Partition({1, 1}), 2));
  CHECK(b.at(Partition({2})) == Scalar(2));
  auto c = expand_in_Q(g_tilde(Partition({3}), 3));
  CHECK(c.at(Partition({3})) == P("v^2-v+1"));
  CHECK(c.at(Partition({2, 1})) == -v());
  CHECK_THROWS_WITH_AS(expand_in_Q(power_sum(2, 2)), "not in the span of Q-functions", std::domain_error);
}

TEST_CASE("principal specialization closed form") {
  CHECK(principal_specialization_Q(Partition({1})) == Scalar(2) / (Scalar(1) - v()));
  CHECK(principal_specialization_Q(Partition({2})) == Scalar(2) / (Scalar(1) - v()).pow(2));
  for (int n = 1; n <= 7; ++n)
    for (const auto &lambda : enumerate_partitions(n, PartitionKind::Strict))
      CHECK(principal_specialization_Q(lambda) == oracle::hook_content_specialization(lambda));
}

TEST_CASE("finite principal specialization of q_r") {
  // prod_{i<m} (1 + t v^i)/(1 - t v^i) evaluated directly
  const int m = 4;
  oracle::Series s = {Scalar(1)};
  s.resize(5);
  for (int i = 0; i < m; ++i) s = oracle::series_mul(s, oracle::plus_over_minus(v().pow(i), 4));
  for (int r = 1; r <= 4; ++r) CHECK(q_function(r, m).principal_specialization() == s[static_cast<std::size_t>(r)]);
}
