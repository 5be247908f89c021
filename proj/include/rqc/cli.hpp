#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rqc::cli {

/// Runs the command line given args (without the program name). Reads the
/// document from the positional file path, or from `in` when the path is
/// "-". Writes the selected report rendering to `out` and errors to `err`.
///
/// Exit codes: 0 all requested checks pass, 1 at least one check fails,
/// 2 input or usage error.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace rqc::cli
