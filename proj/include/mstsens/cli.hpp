#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstsens {

// Entry point shared by the command-line binary and the tests: `args` are
// the argv entries after the program name.  Returns 0 on success, 1 on
// runtime errors (bad input data), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace mstsens
