#ifndef QTENSOR_CLI_HPP
#define QTENSOR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qtensor {

// Runs one command line, given the arguments after the program name.
// Reports go to out, diagnostics to err. Returns the exit status: 0 on
// success, 1 on a validation or verification failure, 2 on parse or usage
// errors (including exceeded bounds).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace qtensor

#endif
