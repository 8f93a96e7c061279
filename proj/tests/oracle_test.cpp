#include "bitalign/oracle.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "bitalign/dptable.hpp"
#include "bitalign/errors.hpp"
#include "bitalign/tb.hpp"
#include "test_util.hpp"

namespace bitalign::oracle {
namespace {

// Memoized recursion over suffix-free formulation, independent of the
// iterative DP: best(i, j) = cost of P[0..i) ending at T[..j).
std::size_t recursive_semiglobal(const std::string& p, const std::string& t) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> best =
      [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == 0) return 0;
    if (j == 0) return i;
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    const bool same = p[i - 1] == t[j - 1];
    const std::size_t v = std::min({best(i - 1, j - 1) + (same ? 0 : 1),
                                    best(i - 1, j) + 1, best(i, j - 1) + 1});
    memo[{i, j}] = v;
    return v;
  };
  return best(p.size(), t.size());
}

std::size_t recursive_global(const std::string& p, const std::string& t) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> best =
      [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == 0) return j;
    if (j == 0) return i;
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    const bool same = p[i - 1] == t[j - 1];
    const std::size_t v = std::min({best(i - 1, j - 1) + (same ? 0 : 1),
                                    best(i - 1, j) + 1, best(i, j - 1) + 1});
    memo[{i, j}] = v;
    return v;
  };
  return best(p.size(), t.size());
}

TEST(SemiglobalTest, Examples) {
  EXPECT_EQ(semiglobal_distance("ACG", "TTACG"), 0u);
  EXPECT_EQ(semiglobal_distance("ACGT", "AGGT"), 1u);
  EXPECT_EQ(recursive_semiglobal("ACGT", "AGGT"), 1u);
  EXPECT_EQ(semiglobal_distance("AAAA", ""), 4u);
  EXPECT_THROW(semiglobal_distance("", "ACGT"), EmptyPattern);
}

TEST(GlobalTest, Examples) {
  EXPECT_EQ(global_distance("ACGT", "ACGT"), 0u);
  EXPECT_EQ(global_distance("ACGT", "AGGT"), 1u);
  EXPECT_EQ(recursive_global("ACGT", "AGGT"), 1u);
  EXPECT_EQ(global_distance("ACGT", ""), 4u);
}

TEST(OracleProperty, AgreesWithRecursionAndOrdering) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string p = testing::random_dna(rng, testing::uniform(rng, 1, 14));
    const std::string t = testing::random_dna(rng, testing::uniform(rng, 0, 14));
    const std::size_t sg = semiglobal_distance(p, t);
    const std::size_t g = global_distance(p, t);
    ASSERT_EQ(sg, recursive_semiglobal(p, t)) << p << " " << t;
    ASSERT_EQ(g, recursive_global(p, t)) << p << " " << t;
    ASSERT_LE(sg, g);
  }
}

TEST(OracleProperty, SemiglobalScriptIsOptimalAndValid) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string p = testing::random_dna(rng, testing::uniform(rng, 1, 20));
    const std::string t = testing::random_dna(rng, testing::uniform(rng, 0, 20));
    const SemiglobalAlignment a = semiglobal_alignment(p, t);
    const ReplayTotals r = replay(p, std::string_view(t).substr(a.text_start), a.ops);
    ASSERT_EQ(r.cost, a.distance);
    ASSERT_EQ(r.pattern_consumed, p.size());
    ASSERT_EQ(r.text_consumed, t.size() - a.text_start);
  }
}

TEST(OracleTest, UnknownSymbolsNeverMatch) {
  EXPECT_EQ(global_distance("N", "N"), 1u);
  EXPECT_EQ(semiglobal_distance("ANA", "ANA"), 1u);
}

TEST(EnumerateReachableTest, SmallInstanceWithinStoredSet) {
  const ReachableSet reads = enumerate_reachable("AC", "AC", 2, 2);
  ASSERT_FALSE(reads.empty());
  const StorageParams params{2, 2, 2, 2};
  for (const Coord& c : reads) {
    EXPECT_LE(c.d, 2u);
    EXPECT_TRUE(c.j == 0 || stored(params, c.d, c.j)) << c.d << "," << c.j;
  }
}

TEST(EnumerateReachableTest, ZeroThresholdTouchesRowZeroOnly) {
  const ReachableSet reads = enumerate_reachable("ACGT", "TTACGT", 0, 4);
  ASSERT_FALSE(reads.empty());
  for (const Coord& c : reads) EXPECT_EQ(c.d, 0u);
}

TEST(EnumerateReachableTest, NoSolutionMeansNoReads) {
  EXPECT_TRUE(enumerate_reachable("AAAA", "TTTT", 2, 4).empty());
}

TEST(EnumerateReachableTest, RejectsLargeInstances) {
  EXPECT_THROW(enumerate_reachable(std::string(13, 'A'), "A", 1, 1), InstanceTooLarge);
  EXPECT_THROW(enumerate_reachable("A", std::string(13, 'A'), 1, 1), InstanceTooLarge);
}

// The predicate must hold for every coordinate any traceback could touch.
TEST(EnumerateReachableProperty, SubsetOfStoredSet) {
  std::mt19937_64 rng(17);
  std::size_t checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = testing::uniform(rng, 1, 12);
    const std::size_t n = testing::uniform(rng, 0, 12);
    const std::size_t k = testing::uniform(rng, 0, 12);
    const std::string p = testing::random_dna(rng, m);
    const std::string t = testing::random_dna(rng, n);
    for (std::size_t budget : {m, m > 2 ? m - 2 : m}) {
      const StorageParams params{n, m, k, budget};
      for (const Coord& c : enumerate_reachable(p, t, k, budget)) {
        ASSERT_TRUE(c.j == 0 || stored(params, c.d, c.j))
            << p << " " << t << " k=" << k << " B=" << budget << " at " << c.d << "," << c.j;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace bitalign::oracle
