#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qoinv/input.hpp"

namespace qoinv {

/// Process exit codes of the command layer.
enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,          // verification ran to a conclusive FAIL
  kExitValidation = 2,
  kExitRefused = 3,
  kExitInconclusive = 4,
};

struct CommandOptions {
  std::optional<std::string> phi;    // "a,b;c,d" or "zero"; overrides the input's phi
  std::string ideal = "logjac";      // jac | logjac | toric-log | custom
  Point point = Point::Unit;
  std::optional<Rat> bound;          // overrides options.bound
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
};

/// Commands: semigroup, ideals, nubar, verify, poincare, branch. Errors are
/// reported inside the JSON under "error" together with the exit code.
CommandResult run_command(std::string_view command, const InputDoc& doc, const CommandOptions& opts = {});
CommandResult run_command_text(std::string_view command, std::string_view input_text,
                               const CommandOptions& opts = {});

/// Exit code for an error category.
int exit_code_for(Errc code) noexcept;

/// Indented key: value rendering of a report.
std::string render_text(const nlohmann::json& report);

/// {"basis": "e"|"M", "coords": [...]}.
nlohmann::json vector_to_json(const RatVec& v);
/// Inverse of vector_to_json.
RatVec vector_from_json(const nlohmann::json& j);

}  // namespace qoinv
