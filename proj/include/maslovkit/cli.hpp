#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace maslovkit::cli {

struct Options {
    /// Colorize text output (only honored with --format text).
    bool color = false;
};

/// Runs one command. args excludes the program name. Results go to out,
/// error objects to err. Exit codes: 0 success, 2 invalid input or usage,
/// 3 unsupported ring, 1 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& opts = {});

/// MASLOVKIT_COLOR=never disables color; auto (the default) follows the terminal.
bool color_from_env(bool stdout_is_tty);

}  // namespace maslovkit::cli
