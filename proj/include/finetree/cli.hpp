#pragma once
// Command-line entry point. The binary's main() forwards argv here so tests
// can drive the full CLI in-process and capture its streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace finetree {

// Runs one CLI invocation. `args` excludes the program name.
// Exit codes: 0 success, 2 verification or consistency failure,
// 3 usage error, limit violation, or malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace finetree
