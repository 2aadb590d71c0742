#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dqa::cli {

struct AnalysisConfig {
    std::string command;
    std::string input;
    std::string format = "auto";  // auto | edges | matrix | named | complex
    std::string emit = "text";    // text | json | csv | dot
    std::string out;              // empty: standard output
    std::optional<int> max_dim;
    int q = 0;
    std::size_t di = 0;
    std::size_t dj = 1;
    std::optional<std::vector<std::size_t>> di_range;
    std::optional<std::vector<std::size_t>> dj_range;
    bool include_diagonal = false;
    std::size_t guard = 100'000'000;
    std::size_t retries = 32;
    int k = 3;                 // clique size for communities
    std::optional<int> n;      // dimension for pm-check
    bool directed = false;     // pm-check along (di, dj)
    unsigned threads = 1;
    std::string dump_paths;    // directory for per-cell path reports
    std::string map_out;       // label dictionary written by convert
};

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kGuardExceeded = 3,
    kInfeasible = 4,
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"count", "classic",   "qgraph", "communities", "pm-check",
                                                "dq-build", "condense", "paths", "topology",   "convert"};
    return names;
}

/// "0..5", "0-5" or "0,2,4". Throws std::invalid_argument on an empty or malformed range.
std::vector<std::size_t> parse_range(const std::string& text);

/// Runs one subcommand; never throws. Output goes to `out` unless
/// config.out names a file.
CommandResult run(const AnalysisConfig& config);

}  // namespace dqa::cli
