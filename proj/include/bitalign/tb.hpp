#pragma once

// Traceback over a filled DP table.
//
// Starting at (j = n, d = d_min, i = m - 1) the walk takes, in priority
// order, the first edge whose bit i is active:
//
//   M   -> '='  (j-1, d,   i-1)
//   S   -> 'X'  (j-1, d-1, i-1)
//   Ins -> 'I'  (j,   d-1, i-1)
//   Del -> 'D'  (j-1, d-1, i)
//
// It stops once pattern bit 0 is consumed, at column 0 (the remaining
// i + 1 pattern characters are insertions covered by the initialization
// row), or as soon as `budget` pattern characters have been consumed.
//
// Ops are returned in pattern order of the table's frame: ops[0] covers
// P[0] (or the first text character of the consumed suffix). Since the walk
// runs from the end of that frame, a budget-limited result covers the
// last `budget` pattern characters.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "bitalign/align_op.hpp"
#include "bitalign/dc.hpp"
#include "bitalign/dptable.hpp"

namespace bitalign {

class EdgePriority {
 public:
  // Default order M > S > Ins > Del.
  constexpr EdgePriority()
      : order_{Edge::kMatch, Edge::kSubstitution, Edge::kInsertion,
               Edge::kDeletion} {}

  // Permutation string over {M, S, I, D}, e.g. "MSID".
  static EdgePriority parse(std::string_view spec);

  const std::array<Edge, 4>& order() const noexcept { return order_; }
  std::string to_string() const;

  friend bool operator==(const EdgePriority&, const EdgePriority&) = default;

 private:
  std::array<Edge, 4> order_;
};

struct TracebackResult {
  Cigar ops;
  std::size_t pattern_consumed = 0;
  std::size_t text_consumed = 0;
  std::size_t cost = 0;
  bool hit_budget = false;
};

// Recomputes the four edges of each visited state from stored R entries.
// PrunedAccess propagates if a read falls outside the storage predicate.
TracebackResult traceback(CompressedTable& table, const PatternMasks& masks,
                          std::string_view pattern, std::string_view text,
                          std::size_t d_min, std::size_t budget,
                          const EdgePriority& priority = {});

// Same walk, reading the stored edge vectors directly.
TracebackResult traceback_baseline(BaselineEdgeTable& table,
                                   std::string_view pattern,
                                   std::string_view text, std::size_t d_min,
                                   std::size_t budget,
                                   const EdgePriority& priority = {});

struct ReplayTotals {
  std::size_t cost = 0;
  std::size_t pattern_consumed = 0;
  std::size_t text_consumed = 0;
};

// Walks `ops` over pattern and text from their first characters. '=' needs
// matching symbols and 'X' needs differing ones; symbols outside the
// alphabet match nothing. Throws InvalidScript on violation or overrun.
ReplayTotals replay(std::string_view pattern, std::string_view text,
                    const Cigar& ops,
                    const Alphabet& alphabet = Alphabet::dna());

}  // namespace bitalign
