#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pkit {

/// Full command-line dispatch shared by the pkit binary and the tests.
/// Exit codes: 0 property holds / ok, 1 property fails (witness in the
/// report), 2 input error, 3 inconclusive.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pkit
