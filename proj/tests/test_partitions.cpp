#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hskein/characters.hpp"
#include "hskein/error.hpp"
#include "hskein/partition.hpp"
#include "oracles.hpp"

using namespace hskein;

TEST(Partitions, SmallCases) {
  ASSERT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0)[0].empty());
  const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(partitions_of(4), four);
  EXPECT_EQ(partitions_of(5).size(), 7u);
}

TEST(Partitions, MatchBruteForce) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    const auto expected = oracle::partitions(n);
    ASSERT_EQ(partitions_of(n).size(), counts[static_cast<std::size_t>(n)]);
    ASSERT_EQ(expected.size(), counts[static_cast<std::size_t>(n)]);
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(partitions_of(n)[i].parts(), expected[i]);
  }
}

TEST(Partitions, Validation) {
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, 0}), Error);
  EXPECT_THROW((void)partitions_of(-1), Error);
  EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 1}), Partition({3, 1, 1}));
  EXPECT_EQ(Partition::row(0), Partition());
}

TEST(Partitions, TextForm) {
  EXPECT_EQ(Partition({3, 1, 1}).to_string(), "[3,1,1]");
  EXPECT_EQ(Partition().to_string(), "[]");
  EXPECT_EQ(Partition::parse("[3,1,1]"), Partition({3, 1, 1}));
  EXPECT_EQ(Partition::parse(" [ 2 , 2 ] "), Partition({2, 2}));
  EXPECT_EQ(Partition::parse("[]"), Partition());
  for (const char* bad : {"", "[1,2]", "[1,", "3,1", "[a]", "[0]"}) EXPECT_THROW((void)Partition::parse(bad), Error) << bad;
}

TEST(Partitions, HooksAndContents) {
  const auto one = hooks_and_contents(Partition{1});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].row, 1);
  EXPECT_EQ(one[0].col, 1);
  EXPECT_EQ(one[0].hook, 1);
  EXPECT_EQ(one[0].content, 0);

  auto multiset = [](const Partition& p, bool hook) {
    std::vector<int> v;
    for (const Cell& c : hooks_and_contents(p)) v.push_back(hook ? c.hook : c.content);
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(multiset({2}, true), (std::vector<int>{1, 2}));
  EXPECT_EQ(multiset({2}, false), (std::vector<int>{0, 1}));
  EXPECT_EQ(multiset({2, 1}, true), (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(multiset({2, 1}, false), (std::vector<int>{-1, 0, 1}));

  for (int n = 0; n <= 8; ++n) {
    for (const Partition& p : partitions_of(n)) {
      auto h = oracle::hooks(p.parts());
      auto c = oracle::contents(p.parts());
      std::sort(h.begin(), h.end());
      std::sort(c.begin(), c.end());
      EXPECT_EQ(multiset(p, true), h);
      EXPECT_EQ(multiset(p, false), c);
      int sum = 0;
      for (int x : c) sum += x;
      EXPECT_EQ(content_sum(p), sum);
    }
  }
}

TEST(Partitions, Conjugate) {
  EXPECT_EQ(Partition({2, 1}).conjugate(), Partition({2, 1}));
  EXPECT_EQ(Partition({3}).conjugate(), Partition({1, 1, 1}));
  EXPECT_EQ(Partition({4, 2, 1}).conjugate(), Partition({3, 2, 1, 1}));
  for (int n = 0; n <= 9; ++n)
    for (const Partition& p : partitions_of(n)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.conjugate().size(), p.size());
      EXPECT_EQ(content_sum(p.conjugate()), -content_sum(p));
    }
}

TEST(Partitions, ZConstant) {
  EXPECT_EQ(z_const({1, 1, 1}), 6);
  EXPECT_EQ(z_const({2, 1}), 2);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(z_const(Partition::row(n)), n);
  // Class sizes n!/z_mu add up to n!.
  for (int n = 0; n <= 10; ++n) {
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    BigInt total = 0;
    for (const Partition& mu : partitions_of(n)) total += fact / z_const(mu);
    EXPECT_EQ(total, fact);
  }
}

TEST(Characters, Examples) {
  for (const Partition& mu : partitions_of(5)) EXPECT_EQ(character({5}, mu), 1);
  EXPECT_EQ(character({1, 1}, {2}), -1);
  EXPECT_EQ(character({2, 1}, {1, 1, 1}), 2);
  EXPECT_THROW((void)character({2, 1}, {2}), Error);
}

TEST(Characters, MatchFrobeniusFormula) {
  for (int n = 0; n <= 7; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const Partition& mu : partitions_of(n))
        EXPECT_EQ(character(lambda, mu), oracle::character(lambda.parts(), mu.parts()))
            << lambda.to_string() << " " << mu.to_string();
}

TEST(Characters, DimensionsAndSigns) {
  for (int n = 1; n <= 10; ++n) {
    const Partition id(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const Partition& lambda : partitions_of(n)) {
      EXPECT_EQ(character(lambda, id), oracle::dimension(lambda.parts()));
      // Tensoring with the sign character conjugates the shape.
      for (const Partition& mu : partitions_of(n))
        EXPECT_EQ(character(lambda.conjugate(), mu), cycle_sign(mu) * character(lambda, mu));
    }
  }
}

TEST(Characters, DiskCacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "hskein_chartable_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("HSKEIN_CACHE_DIR", dir.c_str(), 1);
  const CharTable& t = char_table(11);
  ::unsetenv("HSKEIN_CACHE_DIR");
  const auto file = dir / "chartable_11.json";
  ASSERT_TRUE(std::filesystem::exists(file));
  EXPECT_EQ(t.values().size(), 56u * 56u);
  EXPECT_EQ(t.value(Partition{11}, Partition{11}), 1);
  std::filesystem::remove_all(dir);
}
