#pragma once

namespace narrative {

// Full command-line driver. Returns 0 on success, 1 on usage/config errors,
// 2 on data errors.
int run_cli(int argc, const char* const* argv);

}  // namespace narrative
