#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cauchy/quaternion.hpp"

namespace cauchy::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, human };

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  double tolerance = 1e-10;
  double fd_step = 1e-5;
  Format format = Format::json;
};

enum ExitCode : int { kPass = 0, kToleranceFail = 1, kInputError = 2, kSingularity = 3 };

/// Bad user input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A report plus an optional numeric table (CSV body for trajectory output).
struct CommandResult {
  int exit_code = kPass;
  Json report;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct VerifyOptions {
  std::optional<std::string> builtin;
  std::optional<std::string> expr;
  Chirality chirality = Chirality::left;
  bool rotate = false;
  bool finite_difference = false;
};

struct CylinderOptions {
  std::optional<std::pair<double, double>> t_range;
  std::optional<std::pair<double, double>> s_range;
  bool probe_curvature = false;
  bool to_singularity = false;
  int probe_points = 9;
};

CommandResult cmd_verify(const VerifyOptions& opt, const RunConfig& cfg);
CommandResult cmd_classify(bool grid_oracle, const RunConfig& cfg);
CommandResult cmd_deform(const RunConfig& cfg);
CommandResult cmd_cylinder(const CylinderOptions& opt, const RunConfig& cfg);
CommandResult cmd_rigidity(const RunConfig& cfg);

/// "a..b" with a < b.
std::pair<double, double> parse_range(const std::string& text);

}  // namespace cauchy::cli
