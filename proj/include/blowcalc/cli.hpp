#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blowcalc {

/// Run one CLI command. Returns the process exit code: 0 (yes / success),
/// 1 (decided no), 2 (operational error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blowcalc
