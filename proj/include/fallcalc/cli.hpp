#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fallcalc {

// Exit codes: 0 holds or success, 1 violated or counterexample found,
// 2 precondition failed, 3 bad input or usage.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fallcalc
