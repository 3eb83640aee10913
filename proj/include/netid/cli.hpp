#pragma once

#include <string>
#include <vector>

namespace netid::cli {

/// Entry point behind the `netid` binary. Exit codes: 0 success (and, for
/// `check`, all identities passing), 1 identity failure, 2 input or usage
/// error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without the program name

}  // namespace netid::cli
