#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtheta {

// args[0] is the subcommand. Returns 0 on PASS, 1 on FAIL or violation, 2 on a usage error
// (one line on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtheta
