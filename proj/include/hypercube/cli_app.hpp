#pragma once

#include <iosfwd>

// Entry point of the command-line tool, separated from main() so tests can
// drive it in-process and capture its exact byte output.
// Exit codes: 0 = all assertions passed, 1 = an assertion failed (the report
// carries a witness), 2 = usage or input error.
namespace hypercube {

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypercube
