#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gw::cli {

enum class OutputFormat { Table, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Process exit codes of the `gw` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitMissingAux = 3,
};

/// Runs the `gw` command line. `args` excludes the program name. Normal
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gw::cli
