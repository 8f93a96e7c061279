#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bitalign {

// Extended CIGAR edit operations. Insertion consumes a pattern character
// only, deletion a text character only.
enum class AlignOp : char {
  kMatch = '=',
  kMismatch = 'X',
  kInsertion = 'I',
  kDeletion = 'D',
};

using Cigar = std::vector<AlignOp>;

constexpr std::size_t op_cost(AlignOp op) {
  return op == AlignOp::kMatch ? 0 : 1;
}
constexpr bool consumes_pattern(AlignOp op) { return op != AlignOp::kDeletion; }
constexpr bool consumes_text(AlignOp op) { return op != AlignOp::kInsertion; }
constexpr char to_char(AlignOp op) { return static_cast<char>(op); }

// One character per op, e.g. "=X==". Throws UnknownOperator.
Cigar ops_from_string(std::string_view ops);
std::string ops_to_string(const Cigar& ops);

}  // namespace bitalign
