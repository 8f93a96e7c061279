#include "bitalign/window.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "bitalign/dc.hpp"
#include "bitalign/errors.hpp"

namespace bitalign {

void WindowConfig::validate() const {
  if (window == 0 || window > kMaxWindow) {
    throw InvalidArgument("window must lie in [1, " +
                          std::to_string(kMaxWindow) + "]");
  }
  if (overlap >= window) throw InvalidArgument("overlap must be < window");
  const std::size_t kk = effective_k();
  if (kk == 0 || kk > window) throw InvalidArgument("k must lie in [1, window]");
}

namespace {

struct WindowStep {
  TracebackResult tb;
  std::size_t d_min;
  std::size_t rows_computed;
  std::size_t buffer_words;
  AccessCounters counters;
};

WindowStep run_window(std::string_view pattern, std::string_view text,
                      std::size_t k, std::size_t budget,
                      const WindowConfig& cfg) {
  WindowStep step;
  if (cfg.mode == EngineMode::kImproved) {
    ImprovedDc dc = dc_improved(pattern, text, k, budget);
    step.tb = traceback(dc.table, dc.masks, pattern, text, dc.outcome.d_min,
                        budget, cfg.priority);
    step.d_min = dc.outcome.d_min;
    step.rows_computed = dc.outcome.rows_computed;
    step.buffer_words = dc.outcome.buffer_words;
    step.counters = dc.table.counters();
  } else {
    BaselineDc dc = dc_baseline(pattern, text, k);
    step.tb = traceback_baseline(dc.table, pattern, text, dc.outcome.d_min,
                                 budget, cfg.priority);
    step.d_min = dc.outcome.d_min;
    step.rows_computed = dc.outcome.rows_computed;
    step.buffer_words = dc.outcome.buffer_words;
    step.counters = dc.table.counters();
  }
  return step;
}

}  // namespace

AlignmentResult align(std::string_view pattern, std::string_view text,
                      const WindowConfig& cfg) {
  if (pattern.empty()) throw EmptyPattern();
  cfg.validate();
  const std::size_t k = cfg.effective_k();

  AlignmentResult result;
  std::string p_chunk;
  std::string t_chunk;
  std::size_t p = 0;
  std::size_t t = 0;
  for (std::size_t index = 0; p < pattern.size(); ++index) {
    const std::size_t remaining = pattern.size() - p;
    const bool final_window = remaining <= cfg.window;
    const std::size_t m = std::min(cfg.window, remaining);
    const std::size_t n = std::min(cfg.window, text.size() - t);
    p_chunk.assign(pattern.rbegin() + static_cast<std::ptrdiff_t>(pattern.size() - p - m),
                   pattern.rbegin() + static_cast<std::ptrdiff_t>(pattern.size() - p));
    t_chunk.assign(text.rbegin() + static_cast<std::ptrdiff_t>(text.size() - t - n),
                   text.rbegin() + static_cast<std::ptrdiff_t>(text.size() - t));
    const std::size_t budget = final_window ? m : cfg.window - cfg.overlap;

    WindowStep step;
    try {
      step = run_window(p_chunk, t_chunk, k, budget, cfg);
    } catch (const NotFound&) {
      throw WindowFailed(index, k);
    }

    // The walk ran from the reversed chunk's end, i.e. forward from the
    // cursors; undo the frame reversal applied by traceback.
    result.cigar.insert(result.cigar.end(), step.tb.ops.rbegin(),
                        step.tb.ops.rend());
    result.cost += step.tb.cost;
    result.window_distances.push_back(step.d_min);
    result.rows_computed += step.rows_computed;
    result.entries_computed += step.rows_computed * n;
    result.counters += step.counters;
    result.peak_buffer_words = std::max(result.peak_buffer_words, step.buffer_words);
    p += step.tb.pattern_consumed;
    t += step.tb.text_consumed;
  }
  result.text_consumed = t;
  return result;
}

std::vector<BatchEntry> align_batch(std::span<const SequencePair> pairs,
                                    const WindowConfig& cfg,
                                    std::size_t threads) {
  std::vector<BatchEntry> out(pairs.size());
  auto run_one = [&](std::size_t idx) {
    BatchEntry& slot = out[idx];
    try {
      slot.result = align(pairs[idx].pattern, pairs[idx].text, cfg);
    } catch (const std::exception& e) {
      slot.error = std::current_exception();
      slot.message = e.what();
    }
  };

  const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), pairs.size());
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) run_one(idx);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t idx = next++; idx < pairs.size(); idx = next++) run_one(idx);
    });
  }
  pool.clear();
  return out;
}

}  // namespace bitalign
