#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace theta {

// Runs one CLI invocation. All output goes to `out` (documents) and `err`
// (diagnostics); nothing is read from the environment, so identical
// arguments produce identical bytes.
// Exit codes: 0 ok, 1 usage, 2 mathematical contradiction/infeasibility,
// 3 enumeration cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace theta
