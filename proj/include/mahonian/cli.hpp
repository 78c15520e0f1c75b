#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mahonian {

// Runs one command line (program name excluded). Exit codes: 0 success, 1 verification
// failure or negative check, 2 input error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mahonian
