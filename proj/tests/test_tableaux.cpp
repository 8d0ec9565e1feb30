#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "gt/tableaux.hpp"
#include "oracles.hpp"

using gt::Partition;
using gt::Tableau;

TEST_CASE("partition basics") {
  Partition p({3, 1, 0, 0});
  CHECK(p.num_parts() == 2);
  CHECK(p.part(1) == 3);
  CHECK(p.part(5) == 0);
  CHECK(p.size() == 4);
  CHECK(p.str() == "3,1");
  CHECK(Partition::parse("3,1") == p);
  CHECK(Partition::parse("") == Partition());
  CHECK(p.column_height(1) == 2);
  CHECK(p.column_height(2) == 1);
  CHECK(p.column_height(4) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("horizontal strips") {
  CHECK(gt::is_horizontal_strip(Partition({1}), Partition({2, 1})));
  CHECK_FALSE(gt::is_horizontal_strip(Partition({1}), Partition({2, 2})));
  Partition mu({2, 1});
  CHECK(gt::is_horizontal_strip(mu, mu));
  CHECK_FALSE(gt::is_horizontal_strip(Partition({2, 1}), Partition({1})));
}

TEST_CASE("tableau text round trip and validity") {
  Tableau t = Tableau::parse("1,1;2", 3);
  CHECK(t.str() == "1,1;2");
  CHECK(t.shape() == Partition({2, 1}));
  CHECK(t.at(2, 1) == 2);
  CHECK_THROWS_AS(Tableau::parse("2,1", 3), std::invalid_argument);   // row decreases
  CHECK_THROWS_AS(Tableau::parse("1;1", 3), std::invalid_argument);   // column ties
  CHECK_THROWS_AS(Tableau::parse("1,4", 3), std::invalid_argument);   // entry > n
}

TEST_CASE("enumeration matches brute force on small shapes") {
  CHECK(gt::enumerate_ssyt(Partition({1}), 2).size() == 2);
  CHECK(gt::enumerate_ssyt(Partition({1, 1}), 3).size() == 3);
  CHECK(gt::enumerate_ssyt(Partition({2, 1}), 3).size() == 8);

  for (const auto& shape : oracles::partitions_up_to(4, 3))
    for (int n = static_cast<int>(shape.size()); n <= 3; ++n) {
      auto mine = gt::enumerate_ssyt(Partition(shape), n);
      auto brute = oracles::brute_force_ssyt(shape, n);
      REQUIRE(mine.size() == brute.size());
      std::set<std::vector<std::vector<int>>> seen(brute.begin(), brute.end());
      for (const auto& t : mine) CHECK(seen.count(t.rows()) == 1);
    }
}

TEST_CASE("enumeration order is lexicographic on the row word") {
  auto all = gt::enumerate_ssyt(Partition({2, 1}), 3);
  for (size_t i = 0; i + 1 < all.size(); ++i)
    CHECK(all[i].row_word() < all[i + 1].row_word());
  CHECK(all.front().str() == "1,1;2");
}

TEST_CASE("too many rows is an error, not an empty result") {
  CHECK_THROWS_WITH_AS(gt::enumerate_ssyt(Partition({1, 1, 1}), 2),
                       doctest::Contains("no fillings exist"), std::invalid_argument);
}

TEST_CASE("pattern bijection") {
  Tableau t1 = Tableau::parse("1", 2);
  gt::GtPattern p1 = gt::ssyt_to_gt(t1);
  CHECK(p1.entry(1, 1) == 1);
  CHECK(p1.entry(2, 1) == 1);
  CHECK(p1.entry(2, 2) == 0);

  Tableau t2 = Tableau::parse("2", 2);
  gt::GtPattern p2 = gt::ssyt_to_gt(t2);
  CHECK(p2.entry(1, 1) == 0);
  CHECK(p2.entry(2, 1) == 1);
  CHECK(p2.entry(2, 2) == 0);

  for (const auto& shape : oracles::partitions_up_to(5, 3))
    for (int n = static_cast<int>(shape.size()); n <= 4; ++n)
      for (const auto& t : gt::enumerate_ssyt(Partition(shape), n)) {
        gt::GtPattern p = gt::ssyt_to_gt(t);
        CHECK(gt::gt_to_ssyt(p) == t);
        for (int k = 1; k <= n; ++k)
          CHECK(gt::is_horizontal_strip(p.level(k - 1), p.level(k)));
        CHECK(p.level(n) == t.shape());
      }
}

TEST_CASE("invalid pattern rejected") {
  CHECK_THROWS_WITH_AS(gt::GtPattern({{2}, {1, 0}}), doctest::Contains("not a pattern"),
                       std::invalid_argument);
  CHECK_THROWS_AS(gt::GtPattern({{1}, {1}}), std::invalid_argument);
}

TEST_CASE("content") {
  CHECK(gt::content(Tableau::parse("1,1;2", 3)) == std::vector<int>{2, 1, 0});
  // highest filling has content equal to the shape
  Tableau top = Tableau::parse("1,1,1;2,2", 4);
  CHECK(gt::content(top) == std::vector<int>{3, 2, 0, 0});
  auto all = gt::enumerate_ssyt(Partition({1}), 2);
  CHECK(gt::content(all[0]) == std::vector<int>{1, 0});
  CHECK(gt::content(all[1]) == std::vector<int>{0, 1});
  // entries always add up to the cell count
  for (const auto& t : gt::enumerate_ssyt(Partition({2, 2}), 3)) {
    auto mu = gt::content(t);
    CHECK(std::accumulate(mu.begin(), mu.end(), 0) == 4);
  }
}

TEST_CASE("product formula dimension") {
  CHECK(gt::weyl_dimension(Partition({1}), 2) == 2);
  CHECK(gt::weyl_dimension(Partition({2}), 2) == 3);
  CHECK(gt::weyl_dimension(Partition({2, 1}), 3) == 8);
  for (const auto& shape : oracles::partitions_up_to(6, 5))
    for (int n = static_cast<int>(shape.size()); n <= 5; ++n) {
      CAPTURE(Partition(shape).str());
      CAPTURE(n);
      CHECK(gt::weyl_dimension(Partition(shape), n) ==
            static_cast<long>(gt::enumerate_ssyt(Partition(shape), n).size()));
    }
}

TEST_CASE("no duplicates in enumeration") {
  for (const auto& shape : oracles::partitions_up_to(5, 4))
    for (int n = static_cast<int>(shape.size()); n <= 4; ++n) {
      auto all = gt::enumerate_ssyt(Partition(shape), n);
      std::set<std::vector<int>> words;
      for (const auto& t : all) words.insert(t.row_word());
      CHECK(words.size() == all.size());
    }
}
