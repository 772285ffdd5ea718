#pragma once

#include <iosfwd>

namespace polyfam {

// Exit codes: 0 success, 1 violation or witness found, 2 invalid input,
// 3 budget exceeded or no certificate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyfam
