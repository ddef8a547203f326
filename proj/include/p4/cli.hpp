#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p4::cli {

/// Exit codes; each outcome class maps to exactly one code.
enum Exit : int {
    ok = 0,
    residual_nonzero = 1,
    domain_error = 2,
    parse_error = 3, // unreadable input, malformed JSON or bad command line
    degenerate_step = 4,
    internal_error = 5,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace p4::cli
