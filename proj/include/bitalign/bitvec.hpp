#pragma once

// Fixed-width status bitvectors. A 0 bit marks an active (reachable) DP
// state; bits at positions >= width are padding and always 1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bitalign {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Padding mask for the last word of a row of `bits` bits (bits >= 1).
constexpr Word pad_mask(std::size_t bits) {
  const std::size_t used = bits % kWordBits;
  return used == 0 ? Word{0} : ~Word{0} << used;
}

// Word-span kernels shared by BitRow and the DP engines. All spans of one
// call have the same length; `pad` is pad_mask(width). dst may alias src.
namespace words {

inline void fill_ones(std::span<Word> dst) {
  for (Word& w : dst) w = ~Word{0};
}

inline void fill_init(std::span<Word> dst, std::size_t width, std::size_t d) {
  const std::size_t active = d < width ? d : width;
  for (std::size_t w = 0; w < dst.size(); ++w) {
    const std::size_t lo = w * kWordBits;
    if (active >= lo + kWordBits) {
      dst[w] = 0;
    } else if (active <= lo) {
      dst[w] = ~Word{0};
    } else {
      dst[w] = ~Word{0} << (active - lo);
    }
  }
  dst.back() |= pad_mask(width);
}

// dst = src << 1 with an active 0 shifted into bit 0.
inline void shift_left_active(std::span<const Word> src, std::span<Word> dst,
                              Word pad) {
  const std::size_t n = src.size();
  for (std::size_t w = n; w-- > 1;) {
    dst[w] = (src[w] << 1) | (src[w - 1] >> (kWordBits - 1));
  }
  dst[0] = src[0] << 1;
  dst[n - 1] |= pad;
}

inline bool test(std::span<const Word> v, std::size_t i) {
  return (v[i / kWordBits] >> (i % kWordBits)) & 1U;
}

}  // namespace words

class BitRow {
 public:
  // All bits 1 (no active state). Throws InvalidArgument when width == 0.
  static BitRow ones(std::size_t width);
  // Bits [0, min(d, width)) active.
  static BitRow init(std::size_t width, std::size_t d);
  // Takes the low `width` bits of `src`; padding is forced to 1.
  static BitRow from_words(std::size_t width, std::span<const Word> src);
  // Most significant bit first, e.g. "1100" has bits 3 and 2 set.
  static BitRow from_string(std::string_view bits);

  std::size_t width() const noexcept { return width_; }
  std::span<const Word> words() const noexcept { return words_; }

  // Throws IndexOutOfRange when i >= width.
  bool test(std::size_t i) const;
  BitRow shifted_left_active() const;

  std::string to_string() const;

  friend BitRow operator&(const BitRow& a, const BitRow& b);
  friend BitRow operator|(const BitRow& a, const BitRow& b);
  friend bool operator==(const BitRow& a, const BitRow& b) = default;

 private:
  BitRow(std::size_t width, std::vector<Word> words)
      : width_(width), words_(std::move(words)) {}

  std::size_t width_;
  std::vector<Word> words_;
};

inline BitRow make_ones(std::size_t m) { return BitRow::ones(m); }
inline BitRow make_init(std::size_t m, std::size_t d) {
  return BitRow::init(m, d);
}
inline BitRow shift_left_active(const BitRow& v) {
  return v.shifted_left_active();
}
inline BitRow bit_and(const BitRow& a, const BitRow& b) { return a & b; }
inline BitRow bit_or(const BitRow& a, const BitRow& b) { return a | b; }
inline bool test_bit(const BitRow& v, std::size_t i) { return v.test(i); }

}  // namespace bitalign
