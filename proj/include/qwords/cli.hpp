#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwords::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a domain error and 2 on a usage or input-format error; messages for
/// non-zero statuses go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwords::cli
