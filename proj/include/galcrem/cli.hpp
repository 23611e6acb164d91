// Command-line entry point shared by the galcrem binary and the tests.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galcrem {

/// Runs one subcommand; returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galcrem
