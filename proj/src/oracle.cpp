#include "bitalign/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bitalign/errors.hpp"

namespace bitalign::oracle {

bool symbols_match(char a, char b) noexcept {
  return a == b && (a == 'A' || a == 'C' || a == 'G' || a == 'T');
}

namespace {

using Matrix = std::vector<std::vector<std::size_t>>;

// dp[i][j]: distance of P[0..i) against a suffix of T[0..j).
Matrix semiglobal_matrix(std::string_view p, std::string_view t) {
  Matrix dp(p.size() + 1, std::vector<std::size_t>(t.size() + 1, 0));
  for (std::size_t i = 1; i <= p.size(); ++i) {
    dp[i][0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t diag = dp[i - 1][j - 1] + (symbols_match(p[i - 1], t[j - 1]) ? 0 : 1);
      dp[i][j] = std::min({diag, dp[i - 1][j] + 1, dp[i][j - 1] + 1});
    }
  }
  return dp;
}

}  // namespace

std::size_t semiglobal_distance(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) throw EmptyPattern();
  return semiglobal_matrix(pattern, text)[pattern.size()][text.size()];
}

SemiglobalAlignment semiglobal_alignment(std::string_view pattern,
                                         std::string_view text) {
  if (pattern.empty()) throw EmptyPattern();
  const Matrix dp = semiglobal_matrix(pattern, text);
  SemiglobalAlignment out;
  out.distance = dp[pattern.size()][text.size()];
  std::size_t i = pattern.size();
  std::size_t j = text.size();
  while (i > 0) {
    if (j > 0) {
      const bool same = symbols_match(pattern[i - 1], text[j - 1]);
      if (dp[i][j] == dp[i - 1][j - 1] + (same ? 0 : 1)) {
        out.ops.push_back(same ? AlignOp::kMatch : AlignOp::kMismatch);
        --i;
        --j;
        continue;
      }
      if (dp[i][j] == dp[i][j - 1] + 1) {
        out.ops.push_back(AlignOp::kDeletion);
        --j;
        continue;
      }
    }
    out.ops.push_back(AlignOp::kInsertion);
    --i;
  }
  std::reverse(out.ops.begin(), out.ops.end());
  out.text_start = j;
  return out;
}

std::size_t global_distance(std::string_view pattern, std::string_view text) {
  std::vector<std::size_t> prev(text.size() + 1);
  std::vector<std::size_t> cur(text.size() + 1);
  for (std::size_t j = 0; j <= text.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= pattern.size(); ++i) {
    cur[0] = i;
    const char pc = pattern[i - 1];
    for (std::size_t j = 1; j <= text.size(); ++j) {
      const std::size_t diag = prev[j - 1] + (symbols_match(pc, text[j - 1]) ? 0 : 1);
      cur[j] = std::min({diag, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[text.size()];
}

namespace {

// Per-bit evaluation of the status table, one boolean per (d, j, i):
// true means pattern prefix P[0..i] is reachable at column j with <= d
// edits. Built directly from the edge definitions.
class NaiveTable {
 public:
  NaiveTable(std::string_view p, std::string_view t, std::size_t k)
      : p_(p), t_(t), k_(k), m_(p.size()), n_(t.size()),
        active_((k + 1) * (n_ + 1) * m_, false) {
    for (std::size_t d = 0; d <= k; ++d) {
      for (std::size_t j = 0; j <= n_; ++j) {
        for (std::size_t i = 0; i < m_; ++i) {
          set(d, j, i, compute(d, j, i));
        }
      }
    }
  }

  bool at(std::size_t d, std::size_t j, std::size_t i) const {
    return active_[(d * (n_ + 1) + j) * m_ + i];
  }

  // "prefix up to i-1" with i == 0 meaning the empty prefix, always active.
  bool before(std::size_t d, std::size_t j, std::size_t i) const {
    return i == 0 || at(d, j, i - 1);
  }

  bool match_edge(std::size_t d, std::size_t j, std::size_t i) const {
    return symbols_match(p_[i], t_[j - 1]) && before(d, j - 1, i);
  }
  bool subst_edge(std::size_t d, std::size_t j, std::size_t i) const {
    return before(d - 1, j - 1, i);
  }
  bool ins_edge(std::size_t d, std::size_t j, std::size_t i) const {
    return before(d - 1, j, i);
  }
  bool del_edge(std::size_t d, std::size_t j, std::size_t i) const {
    return at(d - 1, j - 1, i);
  }

 private:
  bool compute(std::size_t d, std::size_t j, std::size_t i) const {
    if (j == 0) return i < d;
    if (match_edge(d, j, i)) return true;
    if (d == 0) return false;
    return subst_edge(d, j, i) || ins_edge(d, j, i) || del_edge(d, j, i);
  }
  void set(std::size_t d, std::size_t j, std::size_t i, bool v) {
    active_[(d * (n_ + 1) + j) * m_ + i] = v;
  }

  std::string_view p_, t_;
  std::size_t k_, m_, n_;
  std::vector<bool> active_;
};

}  // namespace

ReachableSet enumerate_reachable(std::string_view pattern,
                                 std::string_view text, std::size_t k,
                                 std::size_t budget) {
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  if (m == 0) throw EmptyPattern();
  if (m > kMaxEnumerationLength || n > kMaxEnumerationLength ||
      k > kMaxEnumerationLength) {
    throw InstanceTooLarge("enumeration is limited to m, n, k <= " +
                           std::to_string(kMaxEnumerationLength));
  }
  if (budget == 0 || budget > m) throw InvalidArgument("budget must lie in [1, m]");

  const NaiveTable table(pattern, text, k);
  ReachableSet reads;
  std::vector<bool> seen((k + 1) * (n + 1) * m, false);
  struct State { std::size_t d, j, i; };
  std::vector<State> stack;
  for (std::size_t d = 0; d <= k; ++d) {
    if (table.at(d, n, m - 1)) stack.push_back({d, n, m - 1});
  }

  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    const std::size_t key = (s.d * (n + 1) + s.j) * m + s.i;
    if (seen[key]) continue;
    seen[key] = true;
    if (s.j == 0) continue;  // closed-form column, nothing is read

    // Every coordinate an edge evaluation at this state may load.
    reads.insert({s.d, s.j - 1});
    if (s.d > 0) {
      reads.insert({s.d - 1, s.j - 1});
      reads.insert({s.d - 1, s.j});
    }

    const std::size_t consumed = m - s.i;  // after a pattern-consuming step
    const bool pattern_left = s.i > 0 && consumed < budget;
    if (table.match_edge(s.d, s.j, s.i) && pattern_left) {
      stack.push_back({s.d, s.j - 1, s.i - 1});
    }
    if (s.d == 0) continue;
    if (table.subst_edge(s.d, s.j, s.i) && pattern_left) {
      stack.push_back({s.d - 1, s.j - 1, s.i - 1});
    }
    if (table.ins_edge(s.d, s.j, s.i) && pattern_left) {
      stack.push_back({s.d - 1, s.j, s.i - 1});
    }
    if (table.del_edge(s.d, s.j, s.i)) {
      stack.push_back({s.d - 1, s.j - 1, s.i});
    }
  }
  return reads;
}

}  // namespace bitalign::oracle
