#include "bitalign/tb.hpp"

#include <algorithm>
#include <optional>

#include "bitalign/errors.hpp"

namespace bitalign {

EdgePriority EdgePriority::parse(std::string_view spec) {
  EdgePriority p;
  bool seen[4] = {false, false, false, false};
  if (spec.size() != 4) {
    throw InvalidArgument("priority must be a permutation of MSID, got '" +
                          std::string(spec) + "'");
  }
  for (std::size_t pos = 0; pos < 4; ++pos) {
    Edge e;
    switch (spec[pos]) {
      case 'M': e = Edge::kMatch; break;
      case 'S': e = Edge::kSubstitution; break;
      case 'I': e = Edge::kInsertion; break;
      case 'D': e = Edge::kDeletion; break;
      default:
        throw InvalidArgument("priority must be a permutation of MSID, got '" +
                              std::string(spec) + "'");
    }
    auto idx = static_cast<std::size_t>(e);
    if (seen[idx]) {
      throw InvalidArgument("priority repeats an edge: '" + std::string(spec) +
                            "'");
    }
    seen[idx] = true;
    p.order_[pos] = e;
  }
  return p;
}

std::string EdgePriority::to_string() const {
  std::string s;
  for (Edge e : order_) s.push_back("MSID"[static_cast<std::size_t>(e)]);
  return s;
}

namespace {

// Edge bits recomputed from stored R rows. Reads are cached per state so
// S and Del share their (d-1, j-1) load.
class RecomputedEdges {
 public:
  RecomputedEdges(CompressedTable& table, const PatternMasks& masks,
                  std::string_view text)
      : table_(table), masks_(masks), text_(text) {}

  void enter(std::size_t /*d*/, std::size_t /*j*/) {
    left_.reset();
    diag_.reset();
    up_.reset();
  }

  bool active(Edge e, std::size_t d, std::size_t j, std::size_t i) {
    switch (e) {
      case Edge::kMatch:
        if (words::test(masks_.for_symbol(text_[j - 1]), i)) return false;
        return i == 0 || row_active(left_, d, j - 1, i - 1);
      case Edge::kSubstitution:
        return i == 0 || row_active(diag_, d - 1, j - 1, i - 1);
      case Edge::kInsertion:
        return i == 0 || row_active(up_, d - 1, j, i - 1);
      case Edge::kDeletion:
        return row_active(diag_, d - 1, j - 1, i);
    }
    return false;
  }

 private:
  bool row_active(std::optional<std::span<const Word>>& cache, std::size_t d,
                  std::size_t j, std::size_t bit) {
    if (j == 0) return bit < d;
    if (!cache) cache = table_.view(d, j);
    return !words::test(*cache, bit);
  }

  CompressedTable& table_;
  const PatternMasks& masks_;
  std::string_view text_;
  std::optional<std::span<const Word>> left_, diag_, up_;
};

class StoredEdges {
 public:
  explicit StoredEdges(BaselineEdgeTable& table) : table_(table) {}

  void enter(std::size_t, std::size_t) {}

  bool active(Edge e, std::size_t d, std::size_t j, std::size_t i) {
    return !words::test(table_.edge(d, j, e), i);
  }

 private:
  BaselineEdgeTable& table_;
};

template <class Source>
TracebackResult walk(Source& edges, std::size_t m, std::size_t n,
                     std::size_t d_min, std::size_t budget,
                     const EdgePriority& priority) {
  if (budget == 0 || budget > m) {
    throw InvalidArgument("traceback budget must lie in [1, m]");
  }
  TracebackResult r;
  r.ops.reserve(m + d_min);
  auto emit = [&r](AlignOp op) {
    r.ops.push_back(op);
    r.cost += op_cost(op);
    if (consumes_pattern(op)) ++r.pattern_consumed;
    if (consumes_text(op)) ++r.text_consumed;
  };

  std::size_t j = n;
  std::size_t d = d_min;
  std::size_t i = m - 1;
  while (true) {
    if (j == 0) {
      // Init row: exactly the first d pattern bits are active.
      const std::size_t remaining = i + 1;
      if (remaining > d) {
        throw StuckTraceback("column 0 reached with " +
                             std::to_string(remaining) +
                             " pattern chars left at d=" + std::to_string(d));
      }
      const std::size_t take = std::min(remaining, budget - r.pattern_consumed);
      for (std::size_t t = 0; t < take; ++t) emit(AlignOp::kInsertion);
      r.hit_budget = take < remaining;
      break;
    }

    edges.enter(d, j);
    std::optional<Edge> chosen;
    for (Edge e : priority.order()) {
      if (d == 0 && e != Edge::kMatch) continue;
      if (edges.active(e, d, j, i)) {
        chosen = e;
        break;
      }
    }
    if (!chosen) {
      throw StuckTraceback("no active edge at d=" + std::to_string(d) +
                           " j=" + std::to_string(j) +
                           " i=" + std::to_string(i));
    }

    bool pattern_step = true;
    switch (*chosen) {
      case Edge::kMatch:
        emit(AlignOp::kMatch);
        --j;
        break;
      case Edge::kSubstitution:
        emit(AlignOp::kMismatch);
        --j;
        --d;
        break;
      case Edge::kInsertion:
        emit(AlignOp::kInsertion);
        --d;
        break;
      case Edge::kDeletion:
        emit(AlignOp::kDeletion);
        --j;
        --d;
        pattern_step = false;
        break;
    }
    if (!pattern_step) continue;
    if (i == 0) break;
    --i;
    if (r.pattern_consumed == budget) {
      r.hit_budget = true;
      break;
    }
  }
  std::reverse(r.ops.begin(), r.ops.end());
  return r;
}

}  // namespace

TracebackResult traceback(CompressedTable& table, const PatternMasks& masks,
                          std::string_view pattern, std::string_view text,
                          std::size_t d_min, std::size_t budget,
                          const EdgePriority& priority) {
  if (pattern.size() != masks.width() || pattern.size() != table.params().m ||
      text.size() != table.params().n) {
    throw InvalidArgument("traceback inputs do not match the table");
  }
  if (d_min >= table.rows_present()) {
    throw InvalidArgument("d_min row was not computed");
  }
  RecomputedEdges edges(table, masks, text);
  return walk(edges, pattern.size(), text.size(), d_min, budget, priority);
}

TracebackResult traceback_baseline(BaselineEdgeTable& table,
                                   std::string_view pattern,
                                   std::string_view text, std::size_t d_min,
                                   std::size_t budget,
                                   const EdgePriority& priority) {
  if (pattern.size() != table.m() || text.size() != table.n()) {
    throw InvalidArgument("traceback inputs do not match the table");
  }
  if (d_min > table.k()) throw InvalidArgument("d_min exceeds k");
  StoredEdges edges(table);
  return walk(edges, pattern.size(), text.size(), d_min, budget, priority);
}

ReplayTotals replay(std::string_view pattern, std::string_view text,
                    const Cigar& ops, const Alphabet& alphabet) {
  ReplayTotals r;
  std::size_t& p = r.pattern_consumed;
  std::size_t& t = r.text_consumed;
  for (std::size_t pos = 0; pos < ops.size(); ++pos) {
    const AlignOp op = ops[pos];
    if (consumes_pattern(op) && p >= pattern.size()) {
      throw InvalidScript("op " + std::to_string(pos) + " overruns the pattern");
    }
    if (consumes_text(op) && t >= text.size()) {
      throw InvalidScript("op " + std::to_string(pos) + " overruns the text");
    }
    if (op == AlignOp::kMatch && !alphabet.matches(pattern[p], text[t])) {
      throw InvalidScript("'=' at op " + std::to_string(pos) +
                          " on differing symbols");
    }
    if (op == AlignOp::kMismatch && alphabet.matches(pattern[p], text[t])) {
      throw InvalidScript("'X' at op " + std::to_string(pos) +
                          " on matching symbols");
    }
    if (consumes_pattern(op)) ++p;
    if (consumes_text(op)) ++t;
    r.cost += op_cost(op);
  }
  return r;
}

}  // namespace bitalign
