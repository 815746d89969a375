#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqk::cli {

/// Runs one invocation; args excludes the program name. Returns the exit
/// status: 0 success, 1 input or scope error, 2 mismatch under --check or
/// disagreeing models.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqk::cli
