#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "apcoprime/ring.hpp"

namespace apcoprime::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kNegativeResult = 1,  // no witness, no solution, nothing found within the limit
    kUsageError = 2,      // bad flags, unparsable input, violated preconditions
    kInternalError = 3,   // a self-check failed
};

enum class OutputFormat { Text, Json };

/// Settings from the optional key-value config file (`key = value`, `#` comments).
struct CliConfig {
    RingAllowlist allowlist;
    OutputFormat format = OutputFormat::Text;
    long delta_bound = 13;
    long sweep_bound = 100;
    long scan_limit = 100000;
    unsigned jobs = 1;
};

/// Applies the contents of a config file on top of `base`. Throws ParseError.
CliConfig parse_config(const std::string& text, CliConfig base = {});

/// Runs one command line. `env_format` stands in for the APCOPRIME_FORMAT
/// environment variable ("text" or "json"; empty if unset).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const std::string& env_format = "");

}  // namespace apcoprime::cli
