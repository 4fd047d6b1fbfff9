#pragma once

#include <ostream>

namespace edalab {

/// Command-line front end. Exit codes: 0 success (run: optimum hit),
/// 1 configuration or input error, 2 budget exhausted without a hit.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace edalab
