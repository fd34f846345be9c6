#ifndef HOPFALG_CLI_HPP
#define HOPFALG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopfalg {

inline constexpr const char* kReportSchema = "hopfalg-report/1";

// Runs one command line (without the program name). Exit status: 0 when every check passes,
// 1 when some check fails, 2 for bad flags, unreadable or malformed input, or inputs that
// violate a precondition of the requested command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfalg

#endif  // HOPFALG_CLI_HPP
