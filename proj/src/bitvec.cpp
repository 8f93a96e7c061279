#include "bitalign/bitvec.hpp"

#include "bitalign/errors.hpp"

namespace bitalign {

BitRow BitRow::ones(std::size_t width) {
  if (width == 0) throw InvalidArgument("bit row width must be >= 1");
  return BitRow(width, std::vector<Word>(words_for(width), ~Word{0}));
}

BitRow BitRow::init(std::size_t width, std::size_t d) {
  BitRow row = ones(width);
  words::fill_init(row.words_, width, d);
  return row;
}

BitRow BitRow::from_words(std::size_t width, std::span<const Word> src) {
  BitRow row = ones(width);
  if (src.size() < row.words_.size()) {
    throw InvalidArgument("not enough words for bit row width " +
                          std::to_string(width));
  }
  for (std::size_t w = 0; w < row.words_.size(); ++w) row.words_[w] = src[w];
  row.words_.back() |= pad_mask(width);
  return row;
}

BitRow BitRow::from_string(std::string_view bits) {
  BitRow row = ones(bits.size());
  for (std::size_t pos = 0; pos < bits.size(); ++pos) {
    const std::size_t i = bits.size() - 1 - pos;
    const char c = bits[pos];
    if (c == '0') {
      row.words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
    } else if (c != '1') {
      throw InvalidArgument(std::string("bad bit character '") + c + "'");
    }
  }
  return row;
}

bool BitRow::test(std::size_t i) const {
  if (i >= width_) {
    throw IndexOutOfRange("bit " + std::to_string(i) + " outside width " +
                          std::to_string(width_));
  }
  return words::test(words_, i);
}

BitRow BitRow::shifted_left_active() const {
  BitRow out(width_, std::vector<Word>(words_.size()));
  words::shift_left_active(words_, out.words_, pad_mask(width_));
  return out;
}

std::string BitRow::to_string() const {
  std::string s(width_, '1');
  for (std::size_t i = 0; i < width_; ++i) {
    if (!words::test(words_, i)) s[width_ - 1 - i] = '0';
  }
  return s;
}

BitRow operator&(const BitRow& a, const BitRow& b) {
  if (a.width_ != b.width_) throw WidthMismatch(a.width_, b.width_);
  BitRow out = a;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] &= b.words_[w];
  return out;
}

BitRow operator|(const BitRow& a, const BitRow& b) {
  if (a.width_ != b.width_) throw WidthMismatch(a.width_, b.width_);
  BitRow out = a;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] |= b.words_[w];
  return out;
}

}  // namespace bitalign
