#pragma once

namespace ionraman::cli {

// Dispatches one invocation of the command-line tool. Returns the process
// exit code: 0 on success, 1 on a physics/runtime failure, 2 on a usage
// error.
int run(int argc, const char* const* argv);

}  // namespace ionraman::cli
