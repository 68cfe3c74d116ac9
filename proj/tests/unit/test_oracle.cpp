#include <gtest/gtest.h>

#include "graphjac/corpus.hpp"
#include "graphjac/jacobian.hpp"
#include "test_support.hpp"
#include "graphjac/oracle.hpp"

using namespace graphjac;

TEST(EnumerateGroup, CycleThree) {
  const auto t = oracle::enumerate_group(families::cycle(3));
  ASSERT_EQ(t.size(), 3u);
  const std::size_t z = t.zero_index();
  EXPECT_TRUE(t.elements()[z].is_zero());
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(t.add(i, z), i);
    EXPECT_EQ(t.order(i), i == z ? 1u : 3u);
    EXPECT_EQ(t.add(i, t.negate(i)), z);
    EXPECT_EQ(t.scale(i, 3), z);
  }
}

TEST(EnumerateGroup, SingleEdge) {
  const auto t = oracle::enumerate_group(families::path(2));
  EXPECT_EQ(t.size(), 1u);
}

TEST(EnumerateGroup, CompleteFourCensus) {
  const auto t = oracle::enumerate_group(families::complete(4));
  ASSERT_EQ(t.size(), 16u);
  std::size_t small = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(4 % t.order(i), 0u);
    if (t.order(i) <= 2) ++small;
  }
  // Z/4 + Z/4 has four elements killed by 2 (one of them zero)
  EXPECT_EQ(small, 4u);
}

TEST(EnumerateGroup, TableIsAbelianGroup) {
  for (const auto& [name, g] : small_multigraphs(4, 6)) {
    const auto t = oracle::enumerate_group(g);
    const std::size_t k = t.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        ASSERT_LT(t.add(i, j), k);
        EXPECT_EQ(t.add(i, j), t.add(j, i)) << name;
        const std::size_t l = (i + 2 * j) % k;
        EXPECT_EQ(t.add(t.add(i, j), l), t.add(i, t.add(j, l))) << name;
      }
  }
}

TEST(EnumerateGroup, TooLarge) {
  try {
    oracle::enumerate_group(families::complete(5), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(BruteForceDlp, Examples) {
  const auto t = oracle::enumerate_group(families::cycle(3));
  const Divisor d{1, -1, 0};
  EXPECT_EQ(oracle::brute_force_dlp(t, d, d), std::optional<std::uint64_t>(1));
  EXPECT_EQ(oracle::brute_force_dlp(t, d, Divisor(3)),
            std::optional<std::uint64_t>(0));
  EXPECT_EQ(oracle::brute_force_dlp(t, d, Divisor{2, -2, 0}),
            std::optional<std::uint64_t>(2));
  EXPECT_EQ(oracle::brute_force_dlp(t, Divisor(3), d), std::nullopt);
}

TEST(SpanningTrees, Examples) {
  EXPECT_EQ(oracle::spanning_trees_by_enumeration(families::cycle(5)), 5u);
  EXPECT_EQ(oracle::spanning_trees_by_enumeration(families::complete(4)), 16u);
  EXPECT_EQ(oracle::spanning_trees_by_enumeration(families::path(6)), 1u);
  EXPECT_EQ(oracle::spanning_trees_by_enumeration(families::banana(5)), 5u);
  EXPECT_THROW(oracle::spanning_trees_by_enumeration(families::complete(8), 20),
               Error);
}

TEST(Oracle, ThreeWayCountAgreement) {
  for (const auto& [name, g] : builtin_corpus()) {
    const auto trees = oracle::spanning_trees_by_enumeration(g);
    EXPECT_EQ(oracle::enumerate_group(g).size(), trees) << name;
    EXPECT_EQ(spanning_tree_count(g), trees) << name;
  }
}
