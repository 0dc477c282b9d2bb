#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsym {

// Runs the command line `args` (without the program name). Exit codes: 0 ok,
// 1 usage or parse error, 2 precondition violation, 3 internal error or a
// generator that fails verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsym
