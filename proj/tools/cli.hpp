#pragma once

#include <ostream>

namespace vpg {

/// Exit codes: 0 success, 1 validation or precondition failure (including
/// bad flags), 2 budget exhausted, 3 malformed or unreadable input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vpg
