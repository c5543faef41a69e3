#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "frl/complex.hpp"

namespace frl::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParseError = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kCrossCheck = 4;

/// A file path (JSON or terse text) or a builtin such as `cyclic:4:8`.
SimplicialComplex resolve_source(const std::string& source);

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frl::cli
