#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ftgen {

// The command-line driver, separated from main() so tests can run it
// in-process. args excludes the program name. Returns the process exit code:
// 0 on success, 1 on bad usage or a type that does not parse, 2 when a
// requested oracle check finds a counterexample.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace ftgen
