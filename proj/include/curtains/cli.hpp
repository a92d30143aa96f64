#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curtains {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitMalformed = 2;

// Runs one command. args excludes the program name. Returns 0 on success, 1
// when a check fails and 2 on malformed input or I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curtains
