#pragma once

#include <iosfwd>

namespace distmagic::cli {

// Exit status: 0 success or positive verdict, 1 negative verdict, 2 input
// error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace distmagic::cli
