#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paraf {

/// Command-line entry point. `args` excludes the program name.
/// Exit codes: 0 success, 1 negative answer (NO, or violations found by
/// xcheck), 2 usage or input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace paraf
