#pragma once

#include <string>
#include <vector>

namespace hat {

// Runs one CLI invocation.  Exit codes: 0 = success (certificate on
// stdout), 1 = usage or input error, 2 = a computed mathematical check
// was falsified.
int cli_dispatch(std::vector<std::string> args);

}  // namespace hat
