#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsv {

// Command-line entry point, callable in-process (the lsv binary is a thin
// wrapper). Exit codes: 0 success / all identities hold, 1 identity violated
// (counterexample emitted), 2 invalid input or configuration.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsv
