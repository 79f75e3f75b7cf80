#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecg::cli {

/// Exit codes: 0 success, 1 a checked assertion failed, 2 bad usage, input or
/// precondition.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecg::cli
