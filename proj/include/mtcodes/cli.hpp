#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtcodes {

/// Runs the command-line interface on already-split arguments (no program
/// name). Returns the process exit status: 0 on success, 1 on computational
/// errors, 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mtcodes
