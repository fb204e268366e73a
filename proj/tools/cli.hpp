#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reslat::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a checked property fails, 2 on usage, input, or cap errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reslat::cli
