#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prym {

// Runs one prymcalc invocation; args excludes the program name.
// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or data error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prym
