#include "amazing/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

namespace amazing {
namespace {

// Exhaustive count of permutations of n by descent count.
std::vector<Integer> eulerian_by_enumeration(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Integer> counts(n, Integer(0));
  do {
    ++counts[descent_count(Permutation(images))];
  } while (std::next_permutation(images.begin(), images.end()));
  return counts;
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(1, 2), 0);
  EXPECT_EQ(binomial(-3, 2), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(7, -1), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
}

TEST(Binomial, PascalRecurrence) {
  for (int a = 1; a <= 64; ++a)
    for (int k = 1; k <= a + 2; ++k)
      EXPECT_EQ(binomial(a, k), binomial(a - 1, k - 1) + binomial(a - 1, k)) << a << ' ' << k;
}

TEST(Binomial, LargeArgument) {
  // C(100, 50) = 100891344545564193334812497256.
  EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
  EXPECT_EQ(binomial(Integer("1000000000000"), 2), Integer("499999999999500000000000"));
}

TEST(Superfactorial, Values) {
  EXPECT_EQ(superfactorial(1), 1);
  EXPECT_EQ(superfactorial(2), 2);
  EXPECT_EQ(superfactorial(4), 288);
  EXPECT_EQ(superfactorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(Compositions, SmallCases) {
  const auto three = compositions(3);
  ASSERT_EQ(three.size(), 4u);
  EXPECT_EQ(three[0], Composition({1, 1, 1}));
  EXPECT_EQ(three[1], Composition({1, 2}));
  EXPECT_EQ(three[2], Composition({2, 1}));
  EXPECT_EQ(three[3], Composition({3}));

  const auto zero = compositions(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].weight(), 0);
  EXPECT_EQ(zero[0].length(), 0);
}

TEST(Compositions, CountAndOrder) {
  for (int n = 1; n <= 12; ++n) {
    const auto all = compositions(n);
    EXPECT_EQ(all.size(), std::size_t{1} << (n - 1));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                               [](const Composition& a, const Composition& b) {
                                 return a.parts() < b.parts();
                               }));
    for (const auto& c : all) EXPECT_EQ(c.weight(), n);
  }
  EXPECT_EQ(compositions(5).size(), 16u);
}

TEST(Compositions, RejectsNonPositiveParts) {
  EXPECT_THROW(Composition({1, 0, 2}), std::invalid_argument);
  EXPECT_THROW(Composition::from_descent_set({2, 2}, 4), std::invalid_argument);
  EXPECT_THROW(Composition::from_descent_set({4}, 4), std::invalid_argument);
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation(std::vector<int>{1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation(std::vector<int>{}));
  const Permutation p({3, 1, 2});
  EXPECT_EQ(p * p.inverse(), Permutation::identity(3));
  EXPECT_EQ(p * Permutation({2, 1, 3}), Permutation({1, 3, 2}));
}

TEST(DescentStatistics, Examples) {
  const auto id = descent_statistics(Permutation::identity(4));
  EXPECT_TRUE(id.descent_set.empty());
  EXPECT_EQ(id.descent_count, 0);
  EXPECT_EQ(id.descent_composition, Composition({4}));

  const auto one = descent_statistics(Permutation({1, 3, 2}));
  EXPECT_EQ(one.descent_set, std::vector<int>({2}));
  EXPECT_EQ(one.descent_count, 1);
  EXPECT_EQ(one.descent_composition, Composition({2, 1}));

  const auto rev = descent_statistics(Permutation({4, 3, 2, 1}));
  EXPECT_EQ(rev.descent_set, std::vector<int>({1, 2, 3}));
  EXPECT_EQ(rev.descent_count, 3);
  EXPECT_EQ(rev.descent_composition, Composition({1, 1, 1, 1}));

  const auto empty = descent_statistics(Permutation(std::vector<int>{}));
  EXPECT_EQ(empty.descent_count, 0);
  EXPECT_EQ(empty.descent_composition.weight(), 0);
}

TEST(DescentStatistics, CompositionRoundTripOnRandomPermutations) {
  std::mt19937_64 gen(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 10);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), gen);
    const auto stats = descent_statistics(Permutation(images));
    EXPECT_EQ(stats.descent_composition.descent_set(), stats.descent_set);
    EXPECT_EQ(stats.descent_count, stats.descent_composition.length() - 1);
    EXPECT_EQ(stats.descent_composition.weight(), n);
  }
}

TEST(Eulerian, Examples) {
  EXPECT_EQ(eulerian_number(1, 1), 1);
  EXPECT_EQ(eulerian_number(3, 2), 4);
  Integer total = 0;
  for (int k = 1; k <= 4; ++k) total += eulerian_number(4, k);
  EXPECT_EQ(total, 24);
  EXPECT_THROW(eulerian_number(3, 0), std::out_of_range);
  EXPECT_THROW(eulerian_number(3, 4), std::out_of_range);
}

TEST(Eulerian, MatchesEnumeration) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(eulerian_row(n), eulerian_by_enumeration(n)) << n;
}

TEST(Eulerian, SumAndSymmetry) {
  for (int n = 1; n <= 20; ++n) {
    const auto row = eulerian_row(n);
    Integer total = 0;
    for (const auto& a : row) total += a;
    EXPECT_EQ(total, factorial(n));
    for (int k = 1; k <= n; ++k) EXPECT_EQ(row[k - 1], row[n - k]);
  }
}

}  // namespace
}  // namespace amazing
