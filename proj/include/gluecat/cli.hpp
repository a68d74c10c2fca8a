#pragma once

#include <string>
#include <vector>

namespace gluecat {

/// Runs one CLI invocation. Exit codes: 0 success, 1 verified mathematical
/// failure (with the witness printed), 2 usage or input errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace gluecat
