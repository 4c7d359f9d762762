#pragma once

/* Command-line front end.  run() behaves like main(): parses the argument
 * vector (without the program name), writes results to out and diagnostics
 * to err, and returns the process exit code: 0 success, 1 a verification
 * check failed, 2 usage or precondition error.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace rectlift::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rectlift::cli
