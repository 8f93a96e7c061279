#pragma once

// Windowed alignment of long sequences. Each round aligns the next W
// pattern characters against the next W text characters, anchored at the
// current cursors with a free text tail, and commits the first W - O
// pattern characters of the result. The last window commits everything.
//
// Chunks are reversed before the DP fill so the free text prefix of the
// table becomes the forward chunk's far end, and traceback (which walks
// from the table's last column) produces the forward-anchored prefix.

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitalign/align_op.hpp"
#include "bitalign/dptable.hpp"
#include "bitalign/tb.hpp"

namespace bitalign {

enum class EngineMode { kImproved, kBaseline };

inline constexpr std::size_t kMaxWindow = 1024;

struct WindowConfig {
  std::size_t window = 64;
  std::size_t overlap = 24;
  std::optional<std::size_t> k;  // defaults to window
  EdgePriority priority;
  EngineMode mode = EngineMode::kImproved;

  std::size_t effective_k() const noexcept { return k.value_or(window); }
  // Requires 0 <= overlap < window <= kMaxWindow and 1 <= k <= window.
  void validate() const;
};

struct AlignmentResult {
  Cigar cigar;
  std::size_t cost = 0;
  std::size_t text_consumed = 0;
  std::vector<std::size_t> window_distances;
  std::size_t rows_computed = 0;
  // DP entries (d, j >= 1) evaluated over all windows.
  std::size_t entries_computed = 0;
  AccessCounters counters;
  // Largest transient DP working buffer used by any window, in words.
  std::size_t peak_buffer_words = 0;
};

// Throws EmptyPattern, or WindowFailed when a window has no solution
// within k (only possible for k < window).
AlignmentResult align(std::string_view pattern, std::string_view text,
                      const WindowConfig& cfg = {});

struct SequencePair {
  std::string_view pattern;
  std::string_view text;
};

struct BatchEntry {
  std::optional<AlignmentResult> result;
  std::exception_ptr error;
  std::string message;

  bool ok() const noexcept { return result.has_value(); }
};

// Results are in input order and independent of `threads`. Failures are
// recorded in their slot and never abort the batch.
std::vector<BatchEntry> align_batch(std::span<const SequencePair> pairs,
                                    const WindowConfig& cfg,
                                    std::size_t threads = 1);

}  // namespace bitalign
