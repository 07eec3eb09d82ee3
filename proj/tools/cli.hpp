#pragma once

#include <string>
#include <vector>

namespace intrans {

/// Entry point behind the `intrans` binary. Returns the process exit status:
/// 0 on success, 1 on runtime/config errors, CLI11's status on usage errors.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace intrans
