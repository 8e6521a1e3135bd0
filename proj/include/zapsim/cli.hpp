// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <iosfwd>

namespace zapsim {

// Parses argv, runs the requested subcommand, and writes any report files.
// Returns the process exit code: 0 all outputs written, 2 usage error,
// 3 runtime failure. Partial outputs are removed on failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace zapsim
