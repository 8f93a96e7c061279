#pragma once

// FASTA, pair-list TSV and run-length CIGAR text formats.
//
// Pair list: one `id <TAB> pattern <TAB> text` record per line; blank lines
// and lines starting with '#' are skipped. Sequences are uppercased.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitalign/align_op.hpp"

namespace bitalign::io {

struct FastaRecord {
  std::string id;
  std::string description;  // header text after the id, if any
  std::string sequence;
  // Set when the sequence holds symbols outside {A, C, G, T}; those
  // symbols are kept but never match during alignment.
  bool has_unknown_symbols = false;
};

// Throws MalformedFasta on sequence data before a header, an empty id or
// an empty sequence.
std::vector<FastaRecord> read_fasta(std::istream& in);
void write_fasta(std::ostream& out, std::span<const FastaRecord> records,
                 std::size_t line_width = 80);

struct PairRecord {
  std::string id;
  std::string pattern;
  std::string text;
};

// Throws ParseError with the 1-based line number.
std::vector<PairRecord> read_pairs(std::istream& in);
void write_pairs(std::ostream& out, std::span<const PairRecord> pairs);

enum class CigarStyle {
  kExtended,        // '=' and 'X' kept apart
  kCollapsedMatch,  // '=' and 'X' both written as 'M'
};

// "====XX=" -> "4=2X1=". An empty script formats as "".
std::string format_cigar(const Cigar& ops,
                         CigarStyle style = CigarStyle::kExtended);
// Throws UnknownOperator (including classic 'M') or MalformedCigar.
Cigar parse_cigar(std::string_view text);

}  // namespace bitalign::io
