// Command-line front end: parses arguments, dispatches to the computation modules,
// and renders human-readable or JSON reports with exact rationals.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace t237::cli {

// Exit codes: 0 success, 1 domain error (reported on stdout and stderr), 2 usage or
// input-validation error. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace t237::cli
