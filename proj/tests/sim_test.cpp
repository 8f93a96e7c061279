#include "bitalign/sim.hpp"

#include <gtest/gtest.h>

#include "bitalign/errors.hpp"
#include "bitalign/oracle.hpp"
#include "bitalign/tb.hpp"

namespace bitalign::sim {
namespace {

TEST(MakeReferenceTest, DeterministicDnaOfRequestedLength) {
  EXPECT_EQ(make_reference(8, 42), make_reference(8, 42));
  const std::string ref = make_reference(10000, 42);
  EXPECT_EQ(ref.size(), 10000u);
  EXPECT_EQ(ref.find_first_not_of("ACGT"), std::string::npos);
  EXPECT_NE(make_reference(64, 1), make_reference(64, 2));
  EXPECT_THROW(make_reference(0, 1), InvalidArgument);
}

TEST(SimulateReadTest, ErrorFreeReadIsTheSlice) {
  const std::string ref = make_reference(500, 3);
  const SimRecord rec = simulate_read(ref, 100, 200, {0, 0, 0, 9});
  EXPECT_EQ(rec.read, ref.substr(100, 200));
  EXPECT_EQ(rec.truth_cost, 0u);
  EXPECT_EQ(rec.truth_cigar, Cigar(200, AlignOp::kMatch));
}

TEST(SimulateReadTest, ErrorRateWithinFrozenBounds) {
  const std::string ref = make_reference(20000, 3);
  const SimRecord rec = simulate_read(ref, 0, 10000, {0.05, 0.025, 0.025, 2024});
  const double rate = static_cast<double>(rec.truth_cost) / 10000.0;
  EXPECT_GE(rate, 0.07);
  EXPECT_LE(rate, 0.13);
}

TEST(SimulateReadTest, Deterministic) {
  const std::string ref = make_reference(3000, 3);
  const ErrorProfile profile{0.05, 0.03, 0.02, 77};
  const SimRecord a = simulate_read(ref, 10, 2000, profile);
  const SimRecord b = simulate_read(ref, 10, 2000, profile);
  EXPECT_EQ(a.read, b.read);
  EXPECT_EQ(a.truth_cigar, b.truth_cigar);
  EXPECT_EQ(a.truth_cost, b.truth_cost);
}

TEST(SimulateReadTest, Rejections) {
  const std::string ref = make_reference(100, 3);
  EXPECT_THROW(simulate_read(ref, 50, 51, {}), InvalidArgument);
  EXPECT_THROW(simulate_read(ref, 0, 10, {1.0, 0, 0, 0}), InvalidArgument);
  EXPECT_THROW(simulate_read(ref, 0, 10, {0.5, 0.3, 0.2, 0}), InvalidArgument);
  EXPECT_THROW(simulate_read(ref, 0, 10, {-0.1, 0, 0, 0}), InvalidArgument);
}

TEST(SimulateReadProperty, TruthReplaysAndBoundsOracle) {
  const std::string ref = make_reference(5000, 11);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ErrorProfile profile{0.04 + 0.002 * seed, 0.03, 0.03, seed};
    const std::size_t pos = seed * 50;
    const SimRecord rec = simulate_read(ref, pos, 300, profile);
    const std::string slice = ref.substr(pos, 300);
    const ReplayTotals t = replay(rec.read, slice, rec.truth_cigar);
    ASSERT_EQ(t.cost, rec.truth_cost);
    ASSERT_EQ(t.pattern_consumed, rec.read.size());
    ASSERT_EQ(t.text_consumed, slice.size());
    ASSERT_LE(oracle::semiglobal_distance(rec.read, slice), rec.truth_cost);
  }
}

TEST(SimulateTest, ManyReadsDeterministic) {
  SimulationParams params;
  params.ref_len = 5000;
  params.count = 5;
  params.read_len = 1000;
  params.profile = {0.05, 0.025, 0.025, 1};
  const Simulation a = simulate(params);
  const Simulation b = simulate(params);
  ASSERT_EQ(a.reads.size(), 5u);
  EXPECT_EQ(a.reference, b.reference);
  for (std::size_t r = 0; r < 5; ++r) {
    EXPECT_EQ(a.reads[r].read, b.reads[r].read);
    EXPECT_LE(a.reads[r].ref_start + a.reads[r].ref_length, params.ref_len);
  }
  params.read_len = 6000;
  EXPECT_THROW(simulate(params), InvalidArgument);
}

}  // namespace
}  // namespace bitalign::sim
