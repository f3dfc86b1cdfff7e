#ifndef SCHUR_CLI_HPP
#define SCHUR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace schur::cli {

enum ExitCode : int {
    kSuccess = 0,
    kPropertyFailure = 1,
    kInputError = 2,
    kClassificationMismatch = 3,
    kNumericalFailure = 4,
};

// Runs one command.  `args` excludes the program name.  Normal output goes to
// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur::cli

#endif  // SCHUR_CLI_HPP
