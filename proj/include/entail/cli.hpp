#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entail {

// Exit codes: 0 = provable / all checks passed, 1 = unprovable or check
// failure, 2 = usage or parse error.  With CI_STRICT=1 in the environment,
// randomized subcommands require an explicit --seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entail
