#pragma once

#include <iosfwd>

namespace brauerion {

/// The command-line program: 0 on success, 1 on engine errors or failed
/// checks, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brauerion
