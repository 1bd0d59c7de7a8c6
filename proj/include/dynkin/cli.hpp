#ifndef DYNKIN_CLI_HPP
#define DYNKIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dynkin::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,          // a verification reported a failing case
  kParseError = 2,       // bad diagram spec or bad command line
  kDisagreement = 3,     // counting routes disagree
  kBudgetExhausted = 4,  // the oracle ran out of node expansions
};

// Runs `dynkin-count` with args (not including the program name). Results
// go to out, diagnostics and timings to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dynkin::cli

#endif  // DYNKIN_CLI_HPP
