#include "doctest.h"

#include "spinhecke/scalar.hpp"

#include <random>

using namespace spinhecke;

namespace {

Scalar random_scalar(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-4, 4), d(0, 3);
  Scalar num, den;
  for (int k = d(rng); k >= 0; --k) num += Scalar(c(rng)) * Scalar::u().pow(k);
  for (int k = d(rng); k >= 0; --k) den += Scalar(c(rng)) * Scalar::v().pow(k);
  if (den.is_zero()) den = Scalar(1);
  return num / den;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Scalar v = Scalar::v(), h = (v - Scalar(1)) / Scalar(2);
  CHECK(h + h == v - Scalar(1));
  CHECK(Scalar::u() * Scalar::u() == v);
  CHECK((Scalar(1) - v * v) / (Scalar(1) - v) == Scalar(1) + v);
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK_THROWS_WITH_AS(v / Scalar(), "zero denominator", std::domain_error);
}

TEST_CASE("rendering") {
  Scalar v = Scalar::v();
  CHECK((v - Scalar(1)) / Scalar(2) == Scalar::parse("(v-1)/2"));
  CHECK(((v - Scalar(1)) / Scalar(2)).to_string() == "(v-1)/2");
  CHECK((Scalar(2) * v + Scalar(2)).to_string() == "2*v+2");
  CHECK((-(v - Scalar(1)).pow(4) * (v * v + Scalar(1))).to_string() == "-v^6+4*v^5-7*v^4+8*v^3-7*v^2+4*v-1");
  CHECK(Scalar().to_string() == "0");
  CHECK(Scalar::parse("v^3 - 2*v").to_string() == "v^3-2*v");
}

TEST_CASE("parse errors carry positions") {
  try {
    Scalar::parse("(v-1");
    FAIL("no throw");
  } catch (const ParseError &e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(Scalar::parse("v+*2"), ParseError);
}

TEST_CASE("specialization") {
  Scalar v = Scalar::v();
  CHECK(((v - Scalar(1)) / Scalar(2)).specialize(GaussRational(1)).is_zero());
  CHECK((Scalar(2) * (v * v - v + Scalar(1))).specialize(GaussRational(1)) == GaussRational(2));
  CHECK_THROWS_WITH_AS((Scalar(1) / (Scalar(1) - v)).specialize(GaussRational(1)), "pole at specialization point",
                       std::domain_error);
}

TEST_CASE("ring membership") {
  Scalar v = Scalar::v();
  CHECK(((v - Scalar(1)) / Scalar(2)).in_ring(Ring::A));
  CHECK((Scalar(3) / (Scalar(4) * v.pow(3))).in_ring(Ring::A));
  CHECK_FALSE((Scalar(1) / (v + Scalar(1))).in_ring(Ring::A));
  CHECK_FALSE(Scalar::rational(1, 3).in_ring(Ring::A));
  CHECK_FALSE(Scalar::u().in_ring(Ring::Qv));
  CHECK(v.in_ring(Ring::Qv));
  CHECK_FALSE(Scalar::i().in_ring(Ring::Real));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Scalar::parse(a.to_string()) == a);
  }
}

TEST_CASE("specialization is a ring homomorphism") {
  std::mt19937_64 rng(11);
  const GaussRational x(mpq_class(3, 2));
  for (int k = 0; k < 100; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    try {
      GaussRational sa = a.specialize(x), sb = b.specialize(x);
      CHECK((a + b).specialize(x) == sa + sb);
      CHECK((a * b).specialize(x) == sa * sb);
    } catch (const std::domain_error &) {
    }
  }
}

TEST_CASE("taylor coefficients") {
  Scalar f = Scalar(1) / (Scalar(1) - Scalar::v());
  auto t = f.taylor_u(5);
  REQUIRE(t.size() == 6);
  CHECK(t[0] == GaussRational(1));
  CHECK(t[1] == GaussRational(0));
  CHECK(t[4] == GaussRational(1));
}
