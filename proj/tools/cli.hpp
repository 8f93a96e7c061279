#pragma once

#include <iosfwd>

namespace bitalign::cli {

// Exit codes: 0 success, 1 a pair failed to align, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bitalign::cli
