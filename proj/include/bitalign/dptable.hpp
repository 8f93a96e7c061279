#pragma once

// Persistent per-window DP storage.
//
// CompressedTable keeps one status row R[d][j] per stored coordinate; the
// four edge vectors are recomputed during traceback. BaselineEdgeTable keeps
// all four edge vectors for every (d, j) and is the dense reference store.
//
// Reachability predicate: traceback starts at column n and, before the
// window commits, consumes at most B pattern characters on column-consuming
// steps. Every other column step is a deletion, which lowers d by one, so
// at level d at most k - d deletions have happened. One more column covers
// the predecessor read at the current state. Hence an entry with
// n - j > B + (k - d) + 1 can never be read and is not stored.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bitalign/bitvec.hpp"

namespace bitalign {

struct StorageParams {
  std::size_t n = 0;       // text columns 1..n
  std::size_t m = 1;       // pattern length (row width)
  std::size_t k = 1;       // error levels 0..k
  std::size_t budget = 1;  // pattern chars traceback may consume

  // Throws InvalidArgument unless 1 <= m and 1 <= budget <= m.
  void validate() const;
};

// Throws IndexOutOfRange unless d <= k and 1 <= j <= n.
bool stored(const StorageParams& params, std::size_t d, std::size_t j);

struct AccessCounters {
  std::uint64_t entry_writes = 0;
  std::uint64_t entry_reads = 0;
  std::uint64_t words_allocated = 0;

  std::uint64_t accesses() const noexcept { return entry_writes + entry_reads; }
  AccessCounters& operator+=(const AccessCounters& o) noexcept {
    entry_writes += o.entry_writes;
    entry_reads += o.entry_reads;
    words_allocated += o.words_allocated;
    return *this;
  }
  friend bool operator==(const AccessCounters&, const AccessCounters&) = default;
};

class CompressedTable {
 public:
  explicit CompressedTable(const StorageParams& params);

  const StorageParams& params() const noexcept { return params_; }
  const AccessCounters& counters() const noexcept { return counters_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }
  std::size_t rows_present() const noexcept { return first_col_.size(); }

  bool stored(std::size_t d, std::size_t j) const {
    return bitalign::stored(params_, d, j);
  }

  // Opens row d as the new frontier. Requires d == rows_present().
  void open_row(std::size_t d);

  // Writes R[d][j]. Row d must be the frontier (it is opened implicitly
  // when d == rows_present()). Pruned coordinates are skipped silently.
  void put(std::size_t d, std::size_t j, const BitRow& value);
  void put(std::size_t d, std::size_t j, std::span<const Word> value);

  // R[d][0] is the closed-form initialization row and is never counted.
  BitRow get(std::size_t d, std::size_t j);
  // Same as get for j >= 1 but without copying; the span stays valid for
  // the lifetime of the table. Throws InvalidArgument for j == 0.
  std::span<const Word> view(std::size_t d, std::size_t j);

  // Process-wide number of PrunedAccess errors raised by any table.
  static std::uint64_t pruned_access_count() noexcept;

 private:
  std::size_t slot(std::size_t d, std::size_t j) const {
    return row_offset_[d] + (j - first_col_[d]);
  }
  std::size_t first_stored_column(std::size_t d) const;

  StorageParams params_;
  std::size_t words_per_row_;
  std::vector<std::size_t> first_col_;   // per materialized row
  std::vector<std::size_t> row_offset_;  // entry index of first_col_[d]
  std::vector<Word> payload_;
  std::vector<std::uint8_t> written_;
  AccessCounters counters_;

  static std::atomic<std::uint64_t> pruned_accesses_;
};

enum class Edge : std::uint8_t { kMatch, kSubstitution, kInsertion, kDeletion };

class BaselineEdgeTable {
 public:
  BaselineEdgeTable(std::size_t n, std::size_t m, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }
  const AccessCounters& counters() const noexcept { return counters_; }

  // Stores all four edges of (d, j); counts four writes.
  void put_edges(std::size_t d, std::size_t j, std::span<const Word> match,
                 std::span<const Word> subst, std::span<const Word> del,
                 std::span<const Word> ins);

  // One counted read of a single edge vector.
  std::span<const Word> edge(std::size_t d, std::size_t j, Edge e);
  BitRow get_edge(std::size_t d, std::size_t j, Edge e);

 private:
  std::size_t slot(std::size_t d, std::size_t j, Edge e) const;

  std::size_t n_, m_, k_;
  std::size_t words_per_row_;
  std::vector<Word> payload_;
  AccessCounters counters_;
};

struct ReductionReport {
  AccessCounters improved;
  AccessCounters baseline;
  // Transient DC working buffer of the improved engine; reported only.
  std::uint64_t dc_buffer_words = 0;
  double footprint_reduction = 0.0;
  double access_reduction = 0.0;
  bool degenerate = false;

  static std::string tsv_header();
  std::string tsv_row() const;
};

ReductionReport reduction_report(const AccessCounters& improved,
                                 const AccessCounters& baseline,
                                 std::uint64_t dc_buffer_words = 0);
ReductionReport footprint_report(const CompressedTable& improved,
                                 const BaselineEdgeTable& baseline);

}  // namespace bitalign
