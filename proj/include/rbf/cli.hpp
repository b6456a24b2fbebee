#pragma once
//
// Entry point for the rbf command-line tool, separated from main() so the
// whole surface is testable with captured streams.
//
#include <iosfwd>
#include <string>
#include <vector>

namespace rbf {

// Runs one tool invocation.  args is argv[1..] in natural order; normal
// output goes to `out` unless --output redirects it to a file, diagnostics
// go to `err`.  Returns the process exit code:
//   0  success
//   1  validation failure (a discrepancy exceeded its tolerance)
//   2  usage error (bad flags, bad parameter domain)
//   3  I/O error (unreadable input, unwritable output, malformed JSON)
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rbf
