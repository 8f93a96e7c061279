#include "bitalign/tb.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bitalign/errors.hpp"
#include "bitalign/oracle.hpp"
#include "test_util.hpp"

namespace bitalign {
namespace {

TracebackResult full_traceback(const std::string& p, const std::string& t,
                               const EdgePriority& priority = {}) {
  ImprovedDc dc = dc_improved(p, t, p.size(), p.size());
  return traceback(dc.table, dc.masks, p, t, dc.outcome.d_min, p.size(), priority);
}

std::string_view consumed_suffix(const std::string& t, const TracebackResult& r) {
  return std::string_view(t).substr(t.size() - r.text_consumed);
}

TEST(TracebackTest, Examples) {
  const TracebackResult same = full_traceback("ACGT", "ACGT");
  EXPECT_EQ(ops_to_string(same.ops), "====");
  EXPECT_EQ(same.pattern_consumed, 4u);
  EXPECT_EQ(same.text_consumed, 4u);
  EXPECT_EQ(same.cost, 0u);

  const TracebackResult sub = full_traceback("ACGT", "AGGT");
  EXPECT_EQ(ops_to_string(sub.ops), "=X==");
  EXPECT_EQ(replay("ACGT", "AGGT", sub.ops).cost, oracle::semiglobal_distance("ACGT", "AGGT"));

  const TracebackResult empty = full_traceback("AAAA", "");
  EXPECT_EQ(ops_to_string(empty.ops), "IIII");
  EXPECT_EQ(empty.cost, 4u);

  const TracebackResult ins = full_traceback("ACGT", "ACT");
  EXPECT_EQ(ops_to_string(ins.ops), "==I=");
  EXPECT_EQ(ins.cost, 1u);
  EXPECT_EQ(replay("ACGT", "ACT", ins.ops).cost, 1u);
}

TEST(TracebackTest, FreeTextPrefixIsNotConsumed) {
  const TracebackResult r = full_traceback("ACG", "TTACG");
  EXPECT_EQ(ops_to_string(r.ops), "===");
  EXPECT_EQ(r.text_consumed, 3u);
}

TEST(TracebackTest, BudgetStopsEarly) {
  const std::string p = "ACGTACGTAC";
  ImprovedDc dc = dc_improved(p, p, p.size(), 4);
  const TracebackResult r = traceback(dc.table, dc.masks, p, p, 0, 4);
  EXPECT_TRUE(r.hit_budget);
  EXPECT_EQ(r.pattern_consumed, 4u);
  EXPECT_EQ(ops_to_string(r.ops), "====");
}

TEST(TracebackTest, BudgetTruncatesColumnZeroInsertions) {
  ImprovedDc dc = dc_improved("AAAA", "", 4, 2);
  const TracebackResult r = traceback(dc.table, dc.masks, "AAAA", "", 4, 2);
  EXPECT_EQ(ops_to_string(r.ops), "II");
  EXPECT_TRUE(r.hit_budget);
}

TEST(TracebackTest, CorruptedTableIsStuck) {
  CompressedTable table({1, 2, 1, 2});
  table.put(0, 1, make_ones(2));
  table.put(1, 1, make_ones(2));
  const PatternMasks pm = build_masks("AA");
  EXPECT_THROW(traceback(table, pm, "AA", "C", 1, 2), StuckTraceback);
}

TEST(EdgePriorityTest, Parse) {
  EXPECT_EQ(EdgePriority::parse("MSID"), EdgePriority{});
  EXPECT_EQ(EdgePriority::parse("DIMS").to_string(), "DIMS");
  EXPECT_THROW(EdgePriority::parse("MSI"), InvalidArgument);
  EXPECT_THROW(EdgePriority::parse("MSIM"), InvalidArgument);
  EXPECT_THROW(EdgePriority::parse("MSIX"), InvalidArgument);
}

TEST(ReplayTest, Examples) {
  EXPECT_EQ(replay("ACGT", "AGGT", ops_from_string("=X==")).cost, 1u);
  EXPECT_THROW(replay("AC", "AC", ops_from_string("=X")), InvalidScript);
  const ReplayTotals r = replay("A", "", ops_from_string("I"));
  EXPECT_EQ(r.cost, 1u);
  EXPECT_EQ(r.pattern_consumed, 1u);
  EXPECT_EQ(r.text_consumed, 0u);
  EXPECT_THROW(replay("A", "C", ops_from_string("=")), InvalidScript);
  EXPECT_THROW(replay("A", "", ops_from_string("X")), InvalidScript);
  EXPECT_THROW(replay("", "A", ops_from_string("I")), InvalidScript);
  EXPECT_THROW(replay("N", "N", ops_from_string("=")), InvalidScript);
  EXPECT_EQ(replay("N", "N", ops_from_string("X")).cost, 1u);
}

TEST(TracebackProperty, OptimalValidAndAgreesAcrossEngines) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = testing::uniform(rng, 1, 130);
    const std::string p = testing::random_dna(rng, m);
    const std::string t = trial % 3 == 0 ? testing::random_dna(rng, testing::uniform(rng, 0, 130))
                                         : testing::mutate(rng, p, 0.2);
    ImprovedDc dc = dc_improved(p, t, m, m);
    const TracebackResult r =
        traceback(dc.table, dc.masks, p, t, dc.outcome.d_min, m);
    ASSERT_FALSE(r.hit_budget);
    const ReplayTotals totals = replay(p, consumed_suffix(t, r), r.ops);
    ASSERT_EQ(totals.cost, dc.outcome.d_min);
    ASSERT_EQ(totals.cost, oracle::semiglobal_distance(p, t));
    ASSERT_EQ(totals.pattern_consumed, m);
    ASSERT_EQ(totals.text_consumed, r.text_consumed);
    ASSERT_EQ(r.cost, totals.cost);

    BaselineDc base = dc_baseline(p, t, m);
    const TracebackResult rb =
        traceback_baseline(base.table, p, t, base.outcome.d_min, m);
    ASSERT_EQ(rb.ops, r.ops);
  }
}

TEST(TracebackProperty, EveryPriorityGivesValidScriptOfSameCost) {
  std::string order = "DIMS";
  std::sort(order.begin(), order.end());
  std::vector<EdgePriority> priorities;
  do {
    priorities.push_back(EdgePriority::parse(order));
  } while (std::next_permutation(order.begin(), order.end()));
  ASSERT_EQ(priorities.size(), 24u);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = testing::uniform(rng, 1, 70);
    const std::string p = testing::random_dna(rng, m);
    const std::string t = testing::mutate(rng, p, 0.3);
    const std::size_t truth = oracle::semiglobal_distance(p, t);
    for (const EdgePriority& prio : priorities) {
      const TracebackResult r = full_traceback(p, t, prio);
      const ReplayTotals totals = replay(p, consumed_suffix(t, r), r.ops);
      ASSERT_EQ(totals.cost, truth) << prio.to_string() << " " << p << " " << t;
      ASSERT_EQ(totals.pattern_consumed, m);
    }
  }
}

// Budget-limited walks commit exactly B pattern characters and never read
// a pruned entry.
TEST(TracebackProperty, BudgetedWalksStayInsideStoredSet) {
  std::mt19937_64 rng(53);
  const std::uint64_t pruned_before = CompressedTable::pruned_access_count();
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = testing::uniform(rng, 2, 90);
    const std::string p = testing::random_dna(rng, m);
    const std::string t = testing::mutate(rng, p, 0.25);
    const std::size_t budget = testing::uniform(rng, 1, m);
    const std::size_t k = testing::uniform(rng, oracle::semiglobal_distance(p, t), m);
    ImprovedDc dc = dc_improved(p, t, k, budget);
    const TracebackResult r =
        traceback(dc.table, dc.masks, p, t, dc.outcome.d_min, budget);
    ASSERT_EQ(r.pattern_consumed, budget);
    ASSERT_EQ(r.hit_budget, budget < m);
    // The committed ops are the tail of the frame; they replay against the
    // matching suffixes.
    const ReplayTotals totals = replay(std::string_view(p).substr(m - budget),
                                       consumed_suffix(t, r), r.ops);
    ASSERT_EQ(totals.cost, r.cost);
    ASSERT_LE(r.cost, dc.outcome.d_min);
  }
  EXPECT_EQ(CompressedTable::pruned_access_count(), pruned_before);
}

}  // namespace
}  // namespace bitalign
