#include "bitalign/dc.hpp"

#include <utility>

#include "bitalign/errors.hpp"

namespace bitalign {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(static_cast<unsigned char>(kUnknown));
  if (symbols.empty() || symbols.size() >= kUnknown) {
    throw InvalidArgument("alphabet size must lie in [1, 254]");
  }
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    auto& slot = index_[static_cast<unsigned char>(symbols[s])];
    if (slot != kUnknown) {
      throw InvalidArgument(std::string("duplicate alphabet symbol '") +
                            symbols[s] + "'");
    }
    slot = static_cast<unsigned char>(s);
  }
}

const Alphabet& Alphabet::dna() {
  static const Alphabet kDna("ACGT");
  return kDna;
}

PatternMasks::PatternMasks(std::string_view pattern, const Alphabet& alphabet)
    : width_(pattern.size()),
      words_per_row_(words_for(pattern.size())),
      sentinel_(alphabet.size()) {
  if (pattern.empty()) throw EmptyPattern();
  for (std::size_t c = 0; c < 256; ++c) {
    index_[c] = static_cast<unsigned char>(alphabet.index(static_cast<char>(c)));
  }
  masks_.assign((alphabet.size() + 1) * words_per_row_, ~Word{0});
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const std::size_t idx = alphabet.index(pattern[i]);
    if (idx == Alphabet::kUnknown) continue;
    masks_[idx * words_per_row_ + i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
}

PatternMasks build_masks(std::string_view pattern, const Alphabet& alphabet) {
  return PatternMasks(pattern, alphabet);
}

namespace {

// Word w of (src << 1) with an active 0 shifted in.
template <bool kSingleWord>
inline Word shl_word(const Word* src, std::size_t w) {
  if constexpr (kSingleWord) {
    return src[0] << 1;
  } else {
    return (src[w] << 1) | (w == 0 ? Word{0} : src[w - 1] >> (kWordBits - 1));
  }
}

template <bool kSingleWord>
inline Word shl_and_word(const Word* a, const Word* b, std::size_t w) {
  if constexpr (kSingleWord) {
    return (a[0] & b[0]) << 1;
  } else {
    const Word carry = w == 0 ? Word{0} : (a[w - 1] & b[w - 1]) >> (kWordBits - 1);
    return ((a[w] & b[w]) << 1) | carry;
  }
}

template <bool kSingleWord>
DcOutcome fill_improved(const PatternMasks& masks, std::string_view text,
                        std::size_t k, CompressedTable& table) {
  const std::size_t m = masks.width();
  const std::size_t n = text.size();
  const std::size_t nw = kSingleWord ? 1 : masks.words_per_row();
  const Word pad = pad_mask(m);
  const std::size_t top_word = (m - 1) / kWordBits;
  const Word top_bit = Word{1} << ((m - 1) % kWordBits);

  std::vector<Word> prev((n + 1) * nw);
  std::vector<Word> cur((n + 1) * nw);

  DcOutcome out;
  out.buffer_words = prev.size() + cur.size();
  for (std::size_t d = 0; d <= k; ++d) {
    table.open_row(d);
    words::fill_init(std::span<Word>(cur.data(), nw), m, d);
    for (std::size_t j = 1; j <= n; ++j) {
      const Word* pm = masks.for_symbol(text[j - 1]).data();
      Word* c = cur.data() + j * nw;
      const Word* left = c - nw;
      if (d == 0) {
        for (std::size_t w = 0; w < nw; ++w) {
          c[w] = shl_word<kSingleWord>(left, w) | pm[w];
        }
      } else {
        const Word* diag = prev.data() + (j - 1) * nw;
        const Word* up = diag + nw;
        for (std::size_t w = 0; w < nw; ++w) {
          // S & Ins folded into one shift: (a << 1) & (b << 1) == (a & b) << 1.
          c[w] = (shl_word<kSingleWord>(left, w) | pm[w]) &
                 shl_and_word<kSingleWord>(diag, up, w) & diag[w];
        }
      }
      c[nw - 1] |= pad;
      table.put(d, j, std::span<const Word>(c, nw));
    }
    out.rows_computed = d + 1;
    if ((cur[n * nw + top_word] & top_bit) == 0) {
      out.d_min = d;
      return out;
    }
    std::swap(prev, cur);
  }
  throw NotFound(k);
}

template <bool kSingleWord>
DcOutcome fill_baseline(const PatternMasks& masks, std::string_view text,
                        std::size_t k, BaselineEdgeTable& table) {
  const std::size_t m = masks.width();
  const std::size_t n = text.size();
  const std::size_t nw = kSingleWord ? 1 : masks.words_per_row();
  const Word pad = pad_mask(m);

  // Columns j-1 and j for every error level.
  std::vector<Word> prev((k + 1) * nw);
  std::vector<Word> cur((k + 1) * nw);
  std::vector<Word> edges(4 * nw);
  Word* match = edges.data();
  Word* subst = match + nw;
  Word* del = subst + nw;
  Word* ins = del + nw;

  for (std::size_t d = 0; d <= k; ++d) {
    words::fill_init(std::span<Word>(prev.data() + d * nw, nw), m, d);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const Word* pm = masks.for_symbol(text[j - 1]).data();
    for (std::size_t d = 0; d <= k; ++d) {
      const Word* left = prev.data() + d * nw;
      Word* c = cur.data() + d * nw;
      for (std::size_t w = 0; w < nw; ++w) {
        match[w] = shl_word<kSingleWord>(left, w) | pm[w];
      }
      match[nw - 1] |= pad;
      if (d == 0) {
        for (std::size_t w = 0; w < nw; ++w) {
          subst[w] = del[w] = ins[w] = ~Word{0};
        }
      } else {
        const Word* diag = prev.data() + (d - 1) * nw;
        const Word* up = cur.data() + (d - 1) * nw;
        for (std::size_t w = 0; w < nw; ++w) {
          subst[w] = shl_word<kSingleWord>(diag, w);
          del[w] = diag[w];
          ins[w] = shl_word<kSingleWord>(up, w);
        }
        subst[nw - 1] |= pad;
        ins[nw - 1] |= pad;
      }
      for (std::size_t w = 0; w < nw; ++w) {
        c[w] = match[w] & subst[w] & del[w] & ins[w];
      }
      table.put_edges(d, j, {match, nw}, {subst, nw}, {del, nw}, {ins, nw});
    }
    std::swap(prev, cur);
  }

  DcOutcome out;
  out.rows_computed = k + 1;
  out.buffer_words = prev.size() + cur.size() + edges.size();
  const std::size_t top_word = (m - 1) / kWordBits;
  const Word top_bit = Word{1} << ((m - 1) % kWordBits);
  for (std::size_t d = 0; d <= k; ++d) {
    if ((prev[d * nw + top_word] & top_bit) == 0) {
      out.d_min = d;
      return out;
    }
  }
  throw NotFound(k);
}

}  // namespace

ImprovedDc dc_improved(std::string_view pattern, std::string_view text,
                       std::size_t k, std::size_t budget,
                       const Alphabet& alphabet, Kernel kernel) {
  PatternMasks masks(pattern, alphabet);
  CompressedTable table(StorageParams{text.size(), pattern.size(), k, budget});
  const DcOutcome outcome =
      kernel == Kernel::kAuto && masks.words_per_row() == 1
          ? fill_improved<true>(masks, text, k, table)
          : fill_improved<false>(masks, text, k, table);
  return ImprovedDc{outcome, std::move(masks), std::move(table)};
}

BaselineDc dc_baseline(std::string_view pattern, std::string_view text,
                       std::size_t k, const Alphabet& alphabet,
                       Kernel kernel) {
  PatternMasks masks(pattern, alphabet);
  BaselineEdgeTable table(text.size(), pattern.size(), k);
  const DcOutcome outcome =
      kernel == Kernel::kAuto && masks.words_per_row() == 1
          ? fill_baseline<true>(masks, text, k, table)
          : fill_baseline<false>(masks, text, k, table);
  return BaselineDc{outcome, std::move(masks), std::move(table)};
}

}  // namespace bitalign
