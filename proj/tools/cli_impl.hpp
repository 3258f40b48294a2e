#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fermicat::cli {

// Runs the command line given the arguments after the program name, writing
// to the given streams. Returns the process exit code: 0 on success or when
// all checks pass, 1 when a verification fails, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fermicat::cli
