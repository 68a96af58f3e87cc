// Command-line front end: one subcommand per module, deterministic
// machine-readable output (CSV or JSON), uniform resource-limit handling.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace meandrics {

// Knobs shared by every subcommand. Exact values serialize as decimal
// strings; floating-point fields are printed with 15 significant digits.
struct RunConfig {
    std::string subcommand;
    int threads = 1;
    std::uint64_t max_work = 0;  // resolved from MEANDRICS_MAX_WORK or default
    std::string format = "csv";  // csv | json
    std::string out_path;        // empty = standard output
    std::uint64_t seed = 0;      // reserved for sampled cross-checks
};

// Parses `args` (program name excluded), runs the selected subcommand, and
// writes results to `out` (or the --out file) and diagnostics to `err`.
// Returns 0 on success, 2 on invalid input, 3 when a work limit stopped the
// computation (partial results are still written when they exist).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// argv wrapper around the vector overload, bound to stdout/stderr.
int run(int argc, const char* const* argv);

}  // namespace meandrics
