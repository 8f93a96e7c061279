#include "bitalign/window.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bitalign/errors.hpp"
#include "bitalign/io.hpp"
#include "bitalign/oracle.hpp"
#include "bitalign/sim.hpp"
#include "test_util.hpp"

namespace bitalign {
namespace {

WindowConfig config(std::size_t w, std::size_t o, std::optional<std::size_t> k = {},
                    EngineMode mode = EngineMode::kImproved) {
  WindowConfig cfg;
  cfg.window = w;
  cfg.overlap = o;
  cfg.k = k;
  cfg.mode = mode;
  return cfg;
}

void expect_valid(const std::string& p, const std::string& t, const AlignmentResult& r) {
  const ReplayTotals totals = replay(p, std::string_view(t).substr(0, r.text_consumed), r.cigar);
  EXPECT_EQ(totals.pattern_consumed, p.size());
  EXPECT_EQ(totals.text_consumed, r.text_consumed);
  EXPECT_EQ(totals.cost, r.cost);
}

TEST(WindowConfigTest, Validation) {
  EXPECT_NO_THROW(config(64, 24).validate());
  EXPECT_EQ(config(64, 24).effective_k(), 64u);
  EXPECT_THROW(config(4, 4).validate(), InvalidArgument);
  EXPECT_THROW(config(0, 0).validate(), InvalidArgument);
  EXPECT_THROW(config(4, 2, 5).validate(), InvalidArgument);
  EXPECT_THROW(config(4, 2, 0).validate(), InvalidArgument);
  EXPECT_THROW(config(kMaxWindow + 1, 2).validate(), InvalidArgument);
}

TEST(AlignTest, Examples) {
  const AlignmentResult same = align("ACGTACGT", "ACGTACGT", config(4, 2, 4));
  EXPECT_EQ(io::format_cigar(same.cigar), "8=");
  EXPECT_EQ(same.cost, 0u);
  EXPECT_EQ(same.text_consumed, 8u);

  const AlignmentResult short_text = align("ACGT", "AC", config(64, 24));
  EXPECT_EQ(io::format_cigar(short_text.cigar), "2=2I");
  EXPECT_EQ(short_text.cost, 2u);
  EXPECT_EQ(oracle::semiglobal_distance("TGCA", "CA"), 2u);

  const AlignmentResult sub = align("ACGT", "AGGT");
  EXPECT_EQ(io::format_cigar(sub.cigar), "1=1X2=");
  EXPECT_THROW(align("", "ACGT"), EmptyPattern);
}

TEST(AlignTest, TextTailIsLeftUnconsumed) {
  const AlignmentResult r = align("ACGTACGT", "ACGTACGTTTTT", config(4, 1, 4));
  EXPECT_EQ(r.text_consumed, 8u);
  EXPECT_EQ(r.cost, 0u);
}

TEST(AlignTest, WindowFailedWhenKTooSmall) {
  try {
    align("AAAAAAAA", "TTTTTTTT", config(4, 2, 1));
    FAIL() << "expected WindowFailed";
  } catch (const WindowFailed& e) {
    EXPECT_EQ(e.window(), 0u);
    EXPECT_EQ(e.k(), 1u);
  }
}

TEST(AlignProperty, ValidScriptsBoundsAndEngineAgreement) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = testing::uniform(rng, 1, 400);
    const std::string p = testing::random_dna(rng, m);
    const std::string t = testing::mutate(rng, p, 0.12) + testing::random_dna(rng, trial % 7);
    const std::size_t w = testing::uniform(rng, 2, 80);
    const std::size_t o = testing::uniform(rng, 0, w - 1);
    const AlignmentResult r = align(p, t, config(w, o));
    expect_valid(p, t, r);
    EXPECT_GE(r.cost, oracle::semiglobal_distance(p, t.substr(0, r.text_consumed)));
    std::size_t windows_total = 0;
    for (std::size_t d : r.window_distances) windows_total += d;
    EXPECT_GE(windows_total, r.cost);
    std::size_t rows = 0;
    for (std::size_t d : r.window_distances) rows += d + 1;
    EXPECT_EQ(r.rows_computed, rows);

    const AlignmentResult b = align(p, t, config(w, o, {}, EngineMode::kBaseline));
    EXPECT_EQ(b.window_distances, r.window_distances);
    EXPECT_EQ(b.cigar, r.cigar);
  }
}

TEST(AlignTest, SimulatedLongReadIsValidAndNearOptimal) {
  const std::string ref = sim::make_reference(12000, 5);
  const sim::SimRecord rec = sim::simulate_read(ref, 1000, 10000, {0.05, 0.025, 0.025, 8});
  const std::string slice = ref.substr(rec.ref_start, rec.ref_length);
  const AlignmentResult r = align(rec.read, slice, config(64, 24, 64));
  expect_valid(rec.read, slice, r);
  const std::size_t best = oracle::global_distance(rec.read, slice.substr(0, r.text_consumed));
  EXPECT_GE(r.cost, best);
  EXPECT_LE(static_cast<double>(r.cost - best), 0.10 * static_cast<double>(best));
  EXPECT_LE(r.cost, rec.truth_cost + rec.truth_cost / 10);
}

TEST(AlignBatchTest, DeterministicAcrossThreadCounts) {
  const std::vector<SequencePair> pairs{
      {"ACGTACGT", "ACGTACGT"}, {"ACGT", "AC"}, {"ACGT", "AGGT"}};
  const WindowConfig cfg = config(4, 2, 4);
  const auto one = align_batch(pairs, cfg, 1);
  const auto many = align_batch(pairs, cfg, 8);
  ASSERT_EQ(one.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    ASSERT_TRUE(one[i].ok());
    ASSERT_TRUE(many[i].ok());
    EXPECT_EQ(one[i].result->cigar, many[i].result->cigar);
    EXPECT_EQ(one[i].result->counters, many[i].result->counters);
  }
  EXPECT_TRUE(align_batch({}, cfg, 4).empty());
}

TEST(AlignBatchTest, FailuresStayInTheirSlot) {
  const std::vector<SequencePair> pairs{
      {"ACGT", "ACGT"}, {"AAAAAAAA", "TTTTTTTT"}, {"ACGT", "AGGT"}};
  const auto out = align_batch(pairs, config(4, 2, 1), 2);
  EXPECT_TRUE(out[0].ok());
  EXPECT_FALSE(out[1].ok());
  EXPECT_THROW(std::rethrow_exception(out[1].error), WindowFailed);
  EXPECT_TRUE(out[2].ok());
}

}  // namespace
}  // namespace bitalign
