#pragma once

#include <ostream>

namespace holant {

/// Entry point of the `holant` tool. Results go to `out`, diagnostics to
/// `err`. Exit codes: 0 success, 1 region or precondition failure, 2 budget
/// exceeded, 3 parse error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace holant
