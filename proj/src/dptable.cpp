#include "bitalign/dptable.hpp"

#include <cstdio>

#include "bitalign/errors.hpp"

namespace bitalign {

void StorageParams::validate() const {
  if (m == 0) throw InvalidArgument("pattern length must be >= 1");
  if (budget == 0 || budget > m) {
    throw InvalidArgument("traceback budget must lie in [1, m], got " +
                          std::to_string(budget));
  }
}

bool stored(const StorageParams& params, std::size_t d, std::size_t j) {
  if (d > params.k || j == 0 || j > params.n) {
    throw IndexOutOfRange("storage coordinate (d=" + std::to_string(d) +
                          ", j=" + std::to_string(j) + ") outside table");
  }
  return params.n - j <= params.budget + (params.k - d) + 1;
}

std::atomic<std::uint64_t> CompressedTable::pruned_accesses_{0};

std::uint64_t CompressedTable::pruned_access_count() noexcept {
  return pruned_accesses_.load(std::memory_order_relaxed);
}

CompressedTable::CompressedTable(const StorageParams& params)
    : params_(params), words_per_row_(words_for(params.m)) {
  params_.validate();
}

std::size_t CompressedTable::first_stored_column(std::size_t d) const {
  const std::size_t slack = params_.budget + (params_.k - d) + 1;
  return params_.n > slack ? params_.n - slack : 1;
}

void CompressedTable::open_row(std::size_t d) {
  if (d != rows_present()) {
    throw FrontierViolation("row " + std::to_string(d) +
                            " opened out of order; frontier is " +
                            std::to_string(rows_present()));
  }
  if (d > params_.k) {
    throw IndexOutOfRange("row " + std::to_string(d) + " exceeds k=" +
                          std::to_string(params_.k));
  }
  const std::size_t first = first_stored_column(d);
  const std::size_t entries = params_.n >= first ? params_.n - first + 1 : 0;
  first_col_.push_back(first);
  row_offset_.push_back(written_.size());
  written_.resize(written_.size() + entries, 0);
  payload_.resize(payload_.size() + entries * words_per_row_, ~Word{0});
}

void CompressedTable::put(std::size_t d, std::size_t j, const BitRow& value) {
  if (value.width() != params_.m) throw WidthMismatch(value.width(), params_.m);
  put(d, j, value.words());
}

void CompressedTable::put(std::size_t d, std::size_t j,
                          std::span<const Word> value) {
  if (d == rows_present()) open_row(d);
  if (d + 1 != rows_present()) {
    throw FrontierViolation("write to row " + std::to_string(d) +
                            " behind the frontier row " +
                            std::to_string(rows_present() - 1));
  }
  if (!stored(d, j)) return;
  const std::size_t s = slot(d, j);
  Word* dst = payload_.data() + s * words_per_row_;
  for (std::size_t w = 0; w < words_per_row_; ++w) dst[w] = value[w];
  ++counters_.entry_writes;
  if (!written_[s]) {
    written_[s] = 1;
    counters_.words_allocated += words_per_row_;
  }
}

std::span<const Word> CompressedTable::view(std::size_t d, std::size_t j) {
  if (j == 0) throw InvalidArgument("column 0 is not stored");
  if (!stored(d, j)) {
    pruned_accesses_.fetch_add(1, std::memory_order_relaxed);
    throw PrunedAccess(d, j);
  }
  if (d >= rows_present()) {
    throw FrontierViolation("row " + std::to_string(d) + " was not computed");
  }
  const std::size_t s = slot(d, j);
  if (!written_[s]) {
    throw Error("entry (d=" + std::to_string(d) + ", j=" + std::to_string(j) +
                ") read before it was written");
  }
  ++counters_.entry_reads;
  return {payload_.data() + s * words_per_row_, words_per_row_};
}

BitRow CompressedTable::get(std::size_t d, std::size_t j) {
  if (j == 0) {
    if (d > params_.k) {
      throw IndexOutOfRange("row " + std::to_string(d) + " exceeds k");
    }
    return BitRow::init(params_.m, d);
  }
  return BitRow::from_words(params_.m, view(d, j));
}

BaselineEdgeTable::BaselineEdgeTable(std::size_t n, std::size_t m,
                                     std::size_t k)
    : n_(n), m_(m), k_(k), words_per_row_(words_for(m)) {
  if (m == 0) throw InvalidArgument("pattern length must be >= 1");
  payload_.assign(4 * (k + 1) * n * words_per_row_, ~Word{0});
  counters_.words_allocated = payload_.size();
}

std::size_t BaselineEdgeTable::slot(std::size_t d, std::size_t j,
                                    Edge e) const {
  if (d > k_ || j == 0 || j > n_) {
    throw IndexOutOfRange("edge coordinate (d=" + std::to_string(d) +
                          ", j=" + std::to_string(j) + ") outside table");
  }
  return ((d * n_ + (j - 1)) * 4 + static_cast<std::size_t>(e)) *
         words_per_row_;
}

void BaselineEdgeTable::put_edges(std::size_t d, std::size_t j,
                                  std::span<const Word> match,
                                  std::span<const Word> subst,
                                  std::span<const Word> del,
                                  std::span<const Word> ins) {
  Word* dst = payload_.data() + slot(d, j, Edge::kMatch);
  for (std::span<const Word> src : {match, subst, ins, del}) {
    for (std::size_t w = 0; w < words_per_row_; ++w) *dst++ = src[w];
  }
  counters_.entry_writes += 4;
}

std::span<const Word> BaselineEdgeTable::edge(std::size_t d, std::size_t j,
                                              Edge e) {
  const std::size_t s = slot(d, j, e);
  ++counters_.entry_reads;
  return {payload_.data() + s, words_per_row_};
}

BitRow BaselineEdgeTable::get_edge(std::size_t d, std::size_t j, Edge e) {
  return BitRow::from_words(m_, edge(d, j, e));
}

ReductionReport reduction_report(const AccessCounters& improved,
                                 const AccessCounters& baseline,
                                 std::uint64_t dc_buffer_words) {
  ReductionReport r;
  r.improved = improved;
  r.baseline = baseline;
  r.dc_buffer_words = dc_buffer_words;
  if (improved.words_allocated == 0 || improved.accesses() == 0) {
    r.degenerate = true;
    return r;
  }
  r.footprint_reduction = static_cast<double>(baseline.words_allocated) /
                          static_cast<double>(improved.words_allocated);
  r.access_reduction = static_cast<double>(baseline.accesses()) /
                       static_cast<double>(improved.accesses());
  return r;
}

ReductionReport footprint_report(const CompressedTable& improved,
                                 const BaselineEdgeTable& baseline) {
  const StorageParams& p = improved.params();
  if (p.n != baseline.n() || p.m != baseline.m()) {
    throw InvalidArgument("tables describe different windows");
  }
  const std::uint64_t buffer = 2 * (p.n + 1) * improved.words_per_row();
  return reduction_report(improved.counters(), baseline.counters(), buffer);
}

std::string ReductionReport::tsv_header() {
  return "words_baseline\twords_improved\treads_baseline\twrites_baseline\t"
         "reads_improved\twrites_improved\tdc_buffer_words\t"
         "footprint_reduction\taccess_reduction";
}

namespace {
std::string ratio(double v, bool degenerate) {
  if (degenerate) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}
}  // namespace

std::string ReductionReport::tsv_row() const {
  return std::to_string(baseline.words_allocated) + '\t' +
         std::to_string(improved.words_allocated) + '\t' +
         std::to_string(baseline.entry_reads) + '\t' +
         std::to_string(baseline.entry_writes) + '\t' +
         std::to_string(improved.entry_reads) + '\t' +
         std::to_string(improved.entry_writes) + '\t' +
         std::to_string(dc_buffer_words) + '\t' +
         ratio(footprint_reduction, degenerate) + '\t' +
         ratio(access_reduction, degenerate);
}

}  // namespace bitalign
