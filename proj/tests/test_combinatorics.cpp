#include "doctest.h"

#include "spinhecke/combinatorics.hpp"

#include <set>
#include <stdexcept>

using namespace spinhecke;

TEST_CASE("enumeration") {
  auto strict3 = enumerate_partitions(3, PartitionKind::Strict);
  REQUIRE(strict3.size() == 2);
  CHECK(strict3[0] == Partition({3}));
  CHECK(strict3[1] == Partition({2, 1}));
  auto odd3 = enumerate_partitions(3, PartitionKind::Odd);
  CHECK(odd3 == std::vector<Partition>{Partition({3}), Partition({1, 1, 1})});
  for (int n = 0; n <= 10; ++n)
    CHECK(enumerate_partitions(n, PartitionKind::Strict).size() == enumerate_partitions(n, PartitionKind::Odd).size());
  CHECK(enumerate_partitions(6).size() == 11);
  CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("w_gamma") {
  auto full = w_gamma(Composition({4}));
  CHECK(full.word == Word{1, 2, 3});
  CHECK(w_gamma(Composition({1, 1, 1})).perm.is_identity());
  auto w21 = w_gamma(Composition({2, 1}));
  CHECK(w21.word == Word{1});
  CHECK(w21.perm.length() == 1);
  auto w22 = w_gamma(Composition({2, 2}));
  CHECK(w22.word == Word{1, 3});
  CHECK(w22.perm.cycle_type() == Partition({2, 2}));
  for (const auto &mu : enumerate_partitions(6)) {
    auto w = w_gamma(Composition(mu.parts()));
    CHECK(w.perm.length() == 6 - mu.length());
    CHECK(is_reduced(6, w.word));
    CHECK(w.perm.cycle_type() == mu);
    CHECK(as_w_gamma(w.perm) == Composition(mu.parts()));
  }
  CHECK_FALSE(as_w_gamma(Permutation::from_one_line({3, 1, 2})).has_value());
}

TEST_CASE("reduced words") {
  for (const auto &p : all_permutations(4)) {
    CHECK(static_cast<int>(p.reduced_word().size()) == p.length());
    CHECK(Permutation::from_word(4, p.reduced_word()) == p);
    for (const auto &w : p.all_reduced_words()) CHECK(Permutation::from_word(4, w) == p);
  }
  auto longest = Permutation::from_one_line({3, 2, 1});
  CHECK(longest.all_reduced_words().size() == 2);
}

TEST_CASE("shifted data") {
  ShiftedData d = shifted_data(Partition({4, 3, 1}));
  CHECK(d.hooks == std::vector<std::vector<int>>{{7, 5, 4, 2}, {4, 3, 1}, {1}});
  CHECK(d.contents == std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 1, 2}, {0}});
  CHECK(d.doubled == Partition({5, 5, 4, 2}));
  long prod = 1;
  for (const auto &row : d.hooks)
    for (int h : row) prod *= h;
  CHECK(prod == 3360);
  ShiftedData two = shifted_data(Partition({2}));
  CHECK(two.doubled == Partition({3, 1}));
  CHECK(two.hooks == std::vector<std::vector<int>>{{2, 1}});
  CHECK(two.n_lambda == 0);
  CHECK(shifted_data(Partition({1})).hooks == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(shifted_data(Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("sort and parse") {
  CHECK(sort_to_partition(Composition({1, 2})) == Partition({2, 1}));
  CHECK(sort_to_partition(Composition({3, 1, 3})) == Partition({3, 3, 1}));
  CHECK(parse_word("2,1,3,2,3,1") == Word{2, 1, 3, 2, 3, 1});
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("1,,2"), std::invalid_argument);
  CHECK(Partition::parse("3,1").to_string() == "3,1");
  CHECK(Partition({3}) < Partition({2, 1}));
  CHECK(Partition({2, 1}) < Partition({1, 1, 1}));
}
