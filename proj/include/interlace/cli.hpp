#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace interlace {

// Runs one CLI invocation. args excludes the program name. Returns the exit
// status: 0 on success, 1 on domain errors, 2 on usage errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace interlace
