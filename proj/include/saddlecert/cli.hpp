#pragma once

#include <string>
#include <vector>

namespace saddlecert {

/// Command-line entry point. Exit codes: 0 all checks pass, 1 a
/// verification or bound check failed, 2 usage error.
int dispatch(const std::vector<std::string>& args);

}  // namespace saddlecert
