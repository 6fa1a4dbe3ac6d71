#pragma once

// Command-line entry point, wrapped for in-process testing.
//
// Exit codes: 0 success, 1 invariant violation found, 2 input error,
// 3 cap exceeded.

namespace liftfan {

int run_cli(int argc, const char* const* argv);

}  // namespace liftfan
