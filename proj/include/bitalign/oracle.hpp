#pragma once

// Reference engines used to check the bit-parallel code. Nothing in here
// shares code with the engine beyond the AlignOp type.

#include <compare>
#include <cstddef>
#include <set>
#include <string_view>

#include "bitalign/align_op.hpp"

namespace bitalign::oracle {

// Symbols outside {A, C, G, T} never match, as in the engine.
bool symbols_match(char a, char b) noexcept;

// min over s of Levenshtein(P, T[s..n)).
std::size_t semiglobal_distance(std::string_view pattern, std::string_view text);

struct SemiglobalAlignment {
  std::size_t distance = 0;
  std::size_t text_start = 0;  // ops align P to T[text_start..n)
  Cigar ops;
};
SemiglobalAlignment semiglobal_alignment(std::string_view pattern,
                                         std::string_view text);

// Plain Levenshtein distance, linear memory.
std::size_t global_distance(std::string_view pattern, std::string_view text);

struct Coord {
  std::size_t d = 0;
  std::size_t j = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};
using ReachableSet = std::set<Coord>;

inline constexpr std::size_t kMaxEnumerationLength = 12;

// Every (d, j) table coordinate any traceback could read, over all edge
// choices and all successful start levels d <= k, when at most `budget`
// pattern characters are consumed. Throws InstanceTooLarge when m or n
// exceeds kMaxEnumerationLength.
ReachableSet enumerate_reachable(std::string_view pattern,
                                 std::string_view text, std::size_t k,
                                 std::size_t budget);

}  // namespace bitalign::oracle
