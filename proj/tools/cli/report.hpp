#pragma once

#include <string>

#include "cli/commands.hpp"

namespace cauchy::cli {

/// Serializes with every floating value printed to 17 significant digits and
/// non-finite values as null, so equal inputs give equal bytes.
std::string to_json_string(const Json& j, int indent = 2);

std::string format_double(double v);

std::string render(const CommandResult& r, Format f);

}  // namespace cauchy::cli
