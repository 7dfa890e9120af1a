#pragma once

#include <string>
#include <vector>

namespace udnsim {

// Batch front end. Subcommands: run (one grid cell), sweep (grid of cells,
// optionally from a preset), validate (parse, echo and check a config).
// Returns the process exit code: 0 success, 1 invalid flags or config,
// 2 I/O failure.
int run_cli(int argc, const char* const* argv);

// Convenience wrapper for in-process callers; prepends the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace udnsim
