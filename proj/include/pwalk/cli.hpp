#pragma once

#include <iosfwd>

namespace pwalk {

// The full command-line surface, parameterized over streams so tests can
// drive it in-process. Exit codes: 0 = pass, 1 = verification or statistical
// failure, 2 = usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pwalk
