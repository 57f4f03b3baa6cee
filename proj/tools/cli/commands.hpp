#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rfi::cli {

// Process exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitDomainError = 3;

inline constexpr const char* kScenarioEnvVar = "RFI_COEXIST_SCENARIO";

/// Entry point of the rfi-coexist tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rfi::cli
