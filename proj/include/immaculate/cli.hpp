#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imm::cli {

/// Runs the command-line front end.  Data goes to `out`, diagnostics to
/// `err`.  Returns 0 on success, 1 on verification failure, 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imm::cli
