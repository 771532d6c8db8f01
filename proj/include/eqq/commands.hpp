#pragma once
#include <iosfwd>

namespace eqq {

// The eqq command line; returns the process exit code (1 usage, 2 parse, 3 domain, 4 internal).
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eqq
