#pragma once

#include <iosfwd>

namespace gt {

// Runs one subcommand. Returns 0 for ok/found, 1 for a negative verdict and
// 2 for usage or input errors.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gt
