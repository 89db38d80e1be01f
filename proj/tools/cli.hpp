#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwcli {

enum ExitCode : int { ok = 0, input_error = 2, hypothesis_refusal = 3, violation = 4 };

// args excludes the program name. Normal output goes to `out` unless --out is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwcli
