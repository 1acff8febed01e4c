#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hhineq {

/// Exit codes: 0 all checks passed, 1 a violated inequality among
/// precondition-passing rows, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace hhineq
