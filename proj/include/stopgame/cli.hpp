#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stopgame {

// Command-line entry point, factored out so tests can drive it in-process.
// Commands: validate, solve, gen, oracle. Exit codes: 0 success / verified,
// 1 invalid input, 2 a profitable deviation was found.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stopgame
