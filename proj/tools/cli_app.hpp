#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uff::cli {

// Exit codes: 0 success / property holds, 1 property fails (a witness is
// printed), 2 usage, parse or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uff::cli
