#pragma once

// Improved-vs-baseline comparison over a batch of pairs: wall time,
// persistent storage and access counts, and cost overhead against the
// quadratic global-distance oracle.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bitalign/dptable.hpp"
#include "bitalign/window.hpp"

namespace bitalign::bench {

struct BenchConfig {
  WindowConfig window;
  std::size_t threads = 1;
  // Pairs whose pattern length times consumed text length exceeds this
  // are not checked against the oracle.
  std::uint64_t oracle_max_cells = 150'000'000;
};

struct BenchRow {
  std::size_t window = 0;
  std::size_t overlap = 0;
  std::size_t k = 0;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::uint64_t pattern_bases = 0;

  double improved_seconds = 0.0;
  double baseline_seconds = 0.0;
  double improved_bases_per_second = 0.0;
  double baseline_bases_per_second = 0.0;
  double speedup = 0.0;  // baseline time / improved time

  ReductionReport reduction;
  std::uint64_t entries_improved = 0;
  std::uint64_t entries_baseline = 0;
  double writes_per_entry_improved = 0.0;
  double writes_per_entry_baseline = 0.0;

  std::uint64_t cost_improved = 0;
  std::uint64_t cost_baseline = 0;
  bool engines_agree = true;  // identical distances and CIGARs per pair

  std::size_t oracle_pairs = 0;
  double mean_cost_overhead = 0.0;
  double median_cost_overhead = 0.0;

  static std::string tsv_header();
  std::string tsv_row() const;
};

struct BenchRun {
  BenchRow row;
  std::vector<BatchEntry> improved;
  std::vector<BatchEntry> baseline;
  // (cost - oracle) / oracle for each oracle-checked pair, in input order;
  // NaN for pairs that were skipped or failed.
  std::vector<double> cost_overhead;
};

BenchRun run_bench(std::span<const SequencePair> pairs, const BenchConfig& cfg);

}  // namespace bitalign::bench
