#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncinv::cli {

/// Exit codes: 0 success, 1 domain error (any ncinv::Error, or a failing
/// selftest), 2 usage error (bad flags, malformed input text).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncinv::cli
