#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hassett::cli {

inline constexpr const char* kSchemaVersion = "1.0";

// Exit codes: 0 success, 1 domain failure (witness-invalid,
// positivity-failure, invalid-k3-disc), 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;
inline constexpr int kExitInvalidInput = 2;

// Full command dispatch; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hassett::cli
