#pragma once

// Distance calculation: fills the bit-parallel edit-distance table.
//
// Bit i of R[d][j] is 0 iff pattern prefix P[0..i] aligns to a suffix of
// T[0..j) with at most d edits (the text prefix before the alignment is
// free). With PM[c] the pattern mask of symbol c and <<1 shifting in an
// active 0:
//
//   R[d][0] = init(m, d)                      (first d bits active)
//   R[0][j] = (R[0][j-1] << 1) | PM[T[j-1]]
//   R[d][j] = M & S & Del & Ins, where
//     M   = (R[d][j-1] << 1) | PM[T[j-1]]     match
//     S   =  R[d-1][j-1] << 1                 substitution
//     Del =  R[d-1][j-1]                      text char skipped
//     Ins =  R[d-1][j]   << 1                 pattern char skipped
//
// The pattern matches with d edits once bit m-1 of R[d][n] is 0.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitalign/bitvec.hpp"
#include "bitalign/dptable.hpp"

namespace bitalign {

// Symbol set the engine distinguishes. Symbols outside the alphabet never
// match anything, themselves included.
class Alphabet {
 public:
  static constexpr std::size_t kUnknown = 255;

  explicit Alphabet(std::string_view symbols);
  static const Alphabet& dna();

  std::size_t size() const noexcept { return symbols_.size(); }
  std::string_view symbols() const noexcept { return symbols_; }
  std::size_t index(char c) const noexcept {
    return index_[static_cast<unsigned char>(c)];
  }
  bool contains(char c) const noexcept { return index(c) != kUnknown; }
  bool matches(char a, char b) const noexcept {
    return a == b && contains(a);
  }

 private:
  std::string symbols_;
  std::array<unsigned char, 256> index_{};
};

class PatternMasks {
 public:
  PatternMasks(std::string_view pattern, const Alphabet& alphabet);

  std::size_t width() const noexcept { return width_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  // Mask for a text symbol; unknown symbols get the all-ones sentinel.
  std::span<const Word> for_symbol(char c) const noexcept {
    const std::size_t idx = index_[static_cast<unsigned char>(c)];
    const std::size_t row = idx == Alphabet::kUnknown ? sentinel_ : idx;
    return {masks_.data() + row * words_per_row_, words_per_row_};
  }
  BitRow mask(char c) const { return BitRow::from_words(width_, for_symbol(c)); }

 private:
  std::array<unsigned char, 256> index_;
  std::size_t width_;
  std::size_t words_per_row_;
  std::size_t sentinel_;
  std::vector<Word> masks_;
};

// Throws EmptyPattern for an empty pattern.
PatternMasks build_masks(std::string_view pattern,
                         const Alphabet& alphabet = Alphabet::dna());

struct DcOutcome {
  std::size_t d_min = 0;
  std::size_t rows_computed = 0;
  // Transient working-buffer size in words (not persistent storage).
  std::size_t buffer_words = 0;
};

struct ImprovedDc {
  DcOutcome outcome;
  PatternMasks masks;
  CompressedTable table;
};

struct BaselineDc {
  DcOutcome outcome;
  PatternMasks masks;
  BaselineEdgeTable table;
};

// kAuto uses the single-word kernel when m <= 64; kGeneric always takes
// the multi-word path.
enum class Kernel { kAuto, kGeneric };

// Row-major fill with early termination at the first successful row.
// Only R is stored, and only at coordinates the storage predicate keeps.
// Throws NotFound(k) when no row <= k succeeds.
ImprovedDc dc_improved(std::string_view pattern, std::string_view text,
                       std::size_t k, std::size_t budget,
                       const Alphabet& alphabet = Alphabet::dna(),
                       Kernel kernel = Kernel::kAuto);

// Text-major fill of all k+1 rows storing the four edge vectors per entry.
// d_min is found afterwards by scanning the last column.
BaselineDc dc_baseline(std::string_view pattern, std::string_view text,
                       std::size_t k,
                       const Alphabet& alphabet = Alphabet::dna(),
                       Kernel kernel = Kernel::kAuto);

}  // namespace bitalign
