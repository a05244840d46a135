#pragma once
// Command-line front end, callable in-process so tests can drive it without
// spawning.  args excludes the program name.  Exit codes: 0 success, 1 a
// verification or reproduction check failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace dirforms {

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace dirforms
