#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pclab {

// Exit codes: 0 success, 1 input error, 2 validation/degenerate error,
// 3 golden mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pclab
