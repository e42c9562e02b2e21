#pragma once

#include <iosfwd>

namespace hexad {

/// Entry point of the `hexad` tool. Exit codes: 0 all checks pass, 1 some
/// check failed, 2 bad usage, parse or validation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hexad
