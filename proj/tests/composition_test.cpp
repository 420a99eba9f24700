#include <gtest/gtest.h>

#include "staircase/composition.hpp"
#include "staircase/error.hpp"

using namespace staircase;

TEST(Composition, ParsesThreeSpellings) {
  const std::vector<int> want{2, 3, 1};
  EXPECT_EQ(parse_int_list("2,3,1"), want);
  EXPECT_EQ(parse_int_list("(2,3,1)"), want);
  EXPECT_EQ(parse_int_list("2 3 1"), want);
  EXPECT_TRUE(parse_int_list("").empty());
}

TEST(Composition, RejectsGarbage) {
  EXPECT_THROW(parse_int_list("2,a"), ParseError);
  EXPECT_THROW(parse_int_list("-1"), ParseError);
  EXPECT_THROW(Composition({1, -2}), DomainError);
}

TEST(Composition, Basics) {
  const Composition c{2, 0, 3};
  EXPECT_EQ(c.at(3), 3);
  EXPECT_EQ(c.weight(), 5);
  EXPECT_EQ(c.reversed(), (Composition{3, 0, 2}));
  EXPECT_EQ(c.swapped(1, 3), (Composition{3, 0, 2}));
  EXPECT_EQ(c.padded(5), (Composition{2, 0, 3, 0, 0}));
  EXPECT_EQ(c.sorted_decreasing(), (Composition{3, 2, 0}));
  EXPECT_EQ(c.to_string(), "(2,0,3)");
  EXPECT_FALSE(c.is_weakly_decreasing());
}

TEST(Partition, DropsTrailingZerosAndPads) {
  const Partition p{3, 1, 0, 0};
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(p.weight(), 4);
  EXPECT_EQ(p.padded(4), (Composition{3, 1, 0, 0}));
  EXPECT_THROW(p.padded(1), DomainError);
  EXPECT_TRUE(p.is_regular(3));
  EXPECT_FALSE(p.is_regular(4));  // two zeros
  EXPECT_FALSE((Partition{2, 2}).is_regular(2));
  EXPECT_THROW((Partition{1, 2}), DomainError);
}

TEST(Partition, Counts) {
  // p(n) for n = 0..8, and with at most 3 parts.
  const std::size_t all[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  const std::size_t three[] = {1, 1, 2, 3, 4, 5, 7, 8, 10};
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(partitions_of(n, 100).size(), all[n]) << n;
    EXPECT_EQ(partitions_of(n, 3).size(), three[n]) << n;
  }
  for (const Partition& p : partitions_of(6, 3)) {
    EXPECT_EQ(p.weight(), 6);
    EXPECT_LE(p.length(), 3u);
  }
}
