#include "bitalign/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "bitalign/oracle.hpp"

namespace bitalign::bench {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn fn) {
  const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

}  // namespace

BenchRun run_bench(std::span<const SequencePair> pairs, const BenchConfig& cfg) {
  cfg.window.validate();
  BenchRun run;
  BenchRow& row = run.row;
  row.window = cfg.window.window;
  row.overlap = cfg.window.overlap;
  row.k = cfg.window.effective_k();
  row.pairs = pairs.size();
  for (const SequencePair& p : pairs) row.pattern_bases += p.pattern.size();

  WindowConfig improved_cfg = cfg.window;
  improved_cfg.mode = EngineMode::kImproved;
  WindowConfig baseline_cfg = cfg.window;
  baseline_cfg.mode = EngineMode::kBaseline;

  auto start = std::chrono::steady_clock::now();
  run.improved = align_batch(pairs, improved_cfg, cfg.threads);
  row.improved_seconds = seconds_since(start);
  start = std::chrono::steady_clock::now();
  run.baseline = align_batch(pairs, baseline_cfg, cfg.threads);
  row.baseline_seconds = seconds_since(start);

  if (row.improved_seconds > 0) {
    row.improved_bases_per_second = row.pattern_bases / row.improved_seconds;
  }
  if (row.baseline_seconds > 0) {
    row.baseline_bases_per_second = row.pattern_bases / row.baseline_seconds;
  }
  if (row.improved_seconds > 0) {
    row.speedup = row.baseline_seconds / row.improved_seconds;
  }

  AccessCounters improved_counters;
  AccessCounters baseline_counters;
  std::uint64_t buffer_words = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const BatchEntry& a = run.improved[i];
    const BatchEntry& b = run.baseline[i];
    if (!a.ok() || !b.ok()) {
      ++row.failures;
      if (a.ok() != b.ok()) row.engines_agree = false;
      continue;
    }
    improved_counters += a.result->counters;
    baseline_counters += b.result->counters;
    buffer_words = std::max<std::uint64_t>(buffer_words, a.result->peak_buffer_words);
    row.entries_improved += a.result->entries_computed;
    row.entries_baseline += b.result->entries_computed;
    row.cost_improved += a.result->cost;
    row.cost_baseline += b.result->cost;
    if (a.result->cigar != b.result->cigar ||
        a.result->window_distances != b.result->window_distances) {
      row.engines_agree = false;
    }
  }
  row.reduction = reduction_report(improved_counters, baseline_counters, buffer_words);
  if (row.entries_improved > 0) {
    row.writes_per_entry_improved =
        static_cast<double>(improved_counters.entry_writes) / row.entries_improved;
  }
  if (row.entries_baseline > 0) {
    row.writes_per_entry_baseline =
        static_cast<double>(baseline_counters.entry_writes) / row.entries_baseline;
  }

  run.cost_overhead.assign(pairs.size(), std::numeric_limits<double>::quiet_NaN());
  parallel_for(pairs.size(), cfg.threads, [&](std::size_t i) {
    const BatchEntry& a = run.improved[i];
    if (!a.ok()) return;
    const AlignmentResult& res = *a.result;
    const std::uint64_t cells =
        static_cast<std::uint64_t>(pairs[i].pattern.size()) * res.text_consumed;
    if (cells > cfg.oracle_max_cells) return;
    const std::size_t best =
        oracle::global_distance(pairs[i].pattern, pairs[i].text.substr(0, res.text_consumed));
    const double extra = static_cast<double>(res.cost) - static_cast<double>(best);
    run.cost_overhead[i] = extra == 0 ? 0.0 : extra / static_cast<double>(std::max<std::size_t>(best, 1));
  });

  std::vector<double> checked;
  for (double v : run.cost_overhead) {
    if (!std::isnan(v)) checked.push_back(v);
  }
  row.oracle_pairs = checked.size();
  if (!checked.empty()) {
    double sum = 0.0;
    for (double v : checked) sum += v;
    row.mean_cost_overhead = sum / checked.size();
    std::sort(checked.begin(), checked.end());
    const std::size_t mid = checked.size() / 2;
    row.median_cost_overhead = checked.size() % 2
                                   ? checked[mid]
                                   : 0.5 * (checked[mid - 1] + checked[mid]);
  }
  return run;
}

std::string BenchRow::tsv_header() {
  return "window\toverlap\tk\tpairs\tfailures\tpattern_bases\t"
         "improved_s\tbaseline_s\timproved_bases_per_s\tbaseline_bases_per_s\t"
         "speedup\t" +
         ReductionReport::tsv_header() +
         "\twrites_per_entry_improved\twrites_per_entry_baseline\t"
         "cost_improved\tcost_baseline\tengines_agree\toracle_pairs\t"
         "mean_cost_overhead\tmedian_cost_overhead";
}

std::string BenchRow::tsv_row() const {
  std::string s;
  auto add = [&s](const std::string& v) {
    if (!s.empty()) s.push_back('\t');
    s += v;
  };
  add(std::to_string(window));
  add(std::to_string(overlap));
  add(std::to_string(k));
  add(std::to_string(pairs));
  add(std::to_string(failures));
  add(std::to_string(pattern_bases));
  add(fmt(improved_seconds));
  add(fmt(baseline_seconds));
  add(fmt(improved_bases_per_second));
  add(fmt(baseline_bases_per_second));
  add(fmt(speedup));
  add(reduction.tsv_row());
  add(fmt(writes_per_entry_improved));
  add(fmt(writes_per_entry_baseline));
  add(std::to_string(cost_improved));
  add(std::to_string(cost_baseline));
  add(engines_agree ? "yes" : "no");
  add(std::to_string(oracle_pairs));
  add(fmt(mean_cost_overhead));
  add(fmt(median_cost_overhead));
  return s;
}

}  // namespace bitalign::bench
