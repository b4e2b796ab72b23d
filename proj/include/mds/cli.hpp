#pragma once

#include <iosfwd>

namespace mds {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconclusive = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternal = 3;

/// Entry point of the mds-oracle command line tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mds
