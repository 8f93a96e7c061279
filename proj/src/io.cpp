#include "bitalign/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include "bitalign/errors.hpp"

namespace bitalign::io {

namespace {

bool is_base(char c) { return c == 'A' || c == 'C' || c == 'G' || c == 'T'; }

void upcase(std::string& s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

void finish_record(std::vector<FastaRecord>& out, FastaRecord& rec) {
  if (rec.sequence.empty()) {
    throw MalformedFasta("record '" + rec.id + "' has an empty sequence");
  }
  rec.has_unknown_symbols = !std::all_of(rec.sequence.begin(), rec.sequence.end(), is_base);
  out.push_back(std::move(rec));
}

}  // namespace

std::vector<FastaRecord> read_fasta(std::istream& in) {
  std::vector<FastaRecord> out;
  FastaRecord rec;
  bool open = false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '>') {
      if (open) finish_record(out, rec);
      rec = FastaRecord{};
      const std::string_view header = std::string_view(line).substr(1);
      const std::size_t cut = header.find_first_of(" \t");
      rec.id = std::string(header.substr(0, cut));
      if (cut != std::string_view::npos) {
        const std::size_t desc = header.find_first_not_of(" \t", cut);
        if (desc != std::string_view::npos) rec.description = std::string(header.substr(desc));
      }
      if (rec.id.empty()) throw MalformedFasta("header without an id");
      open = true;
      continue;
    }
    std::string chunk;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) chunk.push_back(c);
    }
    if (chunk.empty()) continue;
    if (!open) throw MalformedFasta("sequence data before the first header");
    upcase(chunk);
    rec.sequence += chunk;
  }
  if (open) finish_record(out, rec);
  return out;
}

void write_fasta(std::ostream& out, std::span<const FastaRecord> records,
                 std::size_t line_width) {
  if (line_width == 0) line_width = std::string::npos;
  for (const FastaRecord& rec : records) {
    out << '>' << rec.id;
    if (!rec.description.empty()) out << ' ' << rec.description;
    out << '\n';
    for (std::size_t pos = 0; pos < rec.sequence.size(); pos += line_width) {
      out << std::string_view(rec.sequence).substr(pos, line_width) << '\n';
    }
  }
}

std::vector<PairRecord> read_pairs(std::istream& in) {
  std::vector<PairRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 3) {
      throw ParseError(line_no, "expected 3 tab-separated columns, found " +
                                    std::to_string(cols.size()));
    }
    if (cols[0].empty()) throw ParseError(line_no, "empty pair id");
    if (cols[1].empty()) throw ParseError(line_no, "empty pattern");
    upcase(cols[1]);
    upcase(cols[2]);
    out.push_back({std::move(cols[0]), std::move(cols[1]), std::move(cols[2])});
  }
  return out;
}

void write_pairs(std::ostream& out, std::span<const PairRecord> pairs) {
  for (const PairRecord& p : pairs) {
    out << p.id << '\t' << p.pattern << '\t' << p.text << '\n';
  }
}

std::string format_cigar(const Cigar& ops, CigarStyle style) {
  std::string out;
  auto symbol = [style](AlignOp op) {
    if (style == CigarStyle::kCollapsedMatch &&
        (op == AlignOp::kMatch || op == AlignOp::kMismatch)) {
      return 'M';
    }
    return to_char(op);
  };
  for (std::size_t pos = 0; pos < ops.size();) {
    const char c = symbol(ops[pos]);
    std::size_t run = 1;
    while (pos + run < ops.size() && symbol(ops[pos + run]) == c) ++run;
    out += std::to_string(run);
    out.push_back(c);
    pos += run;
  }
  return out;
}

Cigar parse_cigar(std::string_view text) {
  Cigar out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t run = 0;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      run = run * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (run > (std::size_t{1} << 40)) throw MalformedCigar("CIGAR run length too large");
      ++pos;
    }
    if (pos == text.size()) throw MalformedCigar("CIGAR ends without an operator");
    if (pos == digits_start) throw MalformedCigar("CIGAR operator without a run length");
    const Cigar op = ops_from_string(text.substr(pos, 1));
    if (run == 0) throw MalformedCigar("zero-length CIGAR run");
    out.insert(out.end(), run, op[0]);
    ++pos;
  }
  return out;
}

}  // namespace bitalign::io
