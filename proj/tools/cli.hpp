#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace augrule {

enum ExitCode { kOk = 0, kInvalidInput = 1, kVerificationFailed = 2, kResourceLimit = 3 };

// Runs one command line (args excludes the program name).  The JSON result
// goes to `out`, diagnostics to `err`.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace augrule
