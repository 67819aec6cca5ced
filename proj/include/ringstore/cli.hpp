#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringstore {

// Runs the `ringstore` command line. args[0] is the program name. Returns the
// process exit code: 0 on success, 1 on a library error, 2 on a usage error.
// Failures print exactly one line "error: <Category>: <message>" to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ringstore
