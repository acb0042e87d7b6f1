#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace densityseek::cli {

// Runs the command line described by `args` (without the program name),
// writing results to `out` and diagnostics to `err`. Returns the process
// exit code: 0 on success (including a "none" answer), 2 on usage errors,
// 3 on I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// main() adapter: forwards argv[1..] to the overload above with the real
// standard streams.
int run(int argc, const char* const* argv);

} // namespace densityseek::cli
