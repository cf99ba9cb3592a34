#pragma once

#include <iosfwd>

namespace cauchy::cli {

/// Parses arguments, runs one subcommand and writes its report to `out`.
/// Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cauchy::cli
