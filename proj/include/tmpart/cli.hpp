// cli.hpp
// Command-line front end. Results go to `out` as one JSON document,
// diagnostics to `err`.
//
// Exit codes: 0 all checks pass / object produced, 1 a checked property
// failed, 2 usage or I/O error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmpart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace tmpart::cli
