#include "bitalign/align_op.hpp"

#include "bitalign/errors.hpp"

namespace bitalign {

Cigar ops_from_string(std::string_view ops) {
  Cigar out;
  out.reserve(ops.size());
  for (char c : ops) {
    switch (c) {
      case '=': out.push_back(AlignOp::kMatch); break;
      case 'X': out.push_back(AlignOp::kMismatch); break;
      case 'I': out.push_back(AlignOp::kInsertion); break;
      case 'D': out.push_back(AlignOp::kDeletion); break;
      default: throw UnknownOperator(c);
    }
  }
  return out;
}

std::string ops_to_string(const Cigar& ops) {
  std::string out;
  out.reserve(ops.size());
  for (AlignOp op : ops) out.push_back(to_char(op));
  return out;
}

}  // namespace bitalign
