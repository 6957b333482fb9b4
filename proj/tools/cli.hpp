#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geonet {

/// Runs one command line (arguments after the program name).
/// Exit codes: 0 success, 1 verification failure or no convergence, 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace geonet
