#pragma once

#include <iosfwd>

namespace multireg {

/// Entry point of the multireg command line tool. Returns the exit code:
/// 0 on success, 1 on a computation error, 2 on a parse or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace multireg
