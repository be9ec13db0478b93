#pragma once

#include <iosfwd>

namespace hodge::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kBadInput = 2,
    kSolverFailure = 3,
    kIoError = 4,
    kInternalError = 5,
};

/// Entry point of the `hodge` tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hodge::cli
