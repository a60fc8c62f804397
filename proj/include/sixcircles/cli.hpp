#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sixcircles {

/// Runs one command line (args[0] is the program name). Returns 0 on
/// success, 1 on domain errors and 2 on usage errors; diagnostics go to
/// `err` as a single line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sixcircles
