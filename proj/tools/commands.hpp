#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace urn::cli {

enum ExitCode : int { ok = 0, input_error = 1, untenable = 2, mismatch = 3 };

/// Flags of one invocation. Exactly one subcommand is set.
struct RunConfig {
    std::string subcommand;

    std::string scheme_file;
    std::string preset;
    std::string initial; // "2,1" overrides the scheme's starting configuration
    std::string color = "0";

    std::int64_t n = -1;
    std::int64_t horizon = 50;
    std::int64_t order = -1;
    std::string out;
    std::string out_dir = ".";
    std::uint64_t seed = 20120618;
    unsigned workers = 1;

    // series
    bool emit_system = false;
    bool emit_q = false;
    bool check = false;

    // closed-form
    std::string formula;
    std::int64_t theta = 1;
    std::int64_t b0 = 1, w0 = 1, r0 = 0, g0 = 0;
    std::string p = "1/2";

    // figures / simulate
    std::string figure;
    std::int64_t histories = -1;
    std::int64_t exact_max_n = 400;
    std::string sweep_p;
    bool gnuplot = false;
};

/// Parses argv and runs the subcommand. Regular output goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace urn::cli
