#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bifree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one `bifree` invocation. `args` excludes the program name. Files named "-" (or an
/// omitted input) are read from `in`; the JSON result goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bifree::cli
