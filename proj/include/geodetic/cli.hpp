#ifndef GEODETIC_CLI_HPP
#define GEODETIC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace geodetic {

// Command-line entry point, separated from main() so tests can drive it
// in-process. Exit codes: 0 success, 1 operational error (single-line
// "error: ..." on err), 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace geodetic

#endif
