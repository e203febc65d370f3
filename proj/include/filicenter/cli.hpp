#ifndef FILICENTER_CLI_HPP
#define FILICENTER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace filicenter::cli {

inline constexpr const char* kSchema = "filicenter/1";

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Library operation -> the subcommand that exposes it.
struct OperationRoute {
  std::string operation;
  std::string subcommand;
};

const std::vector<OperationRoute>& operation_routes();
std::vector<std::string> subcommand_names();

}  // namespace filicenter::cli

#endif  // FILICENTER_CLI_HPP
