#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace liealg::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// as JSON (or flattened text); usage problems go to `err`.
/// Exit codes: 0 success, 1 domain error or failed validation, 2 parse/format error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace liealg::cli
