#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glres {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInadmissible = 2;
inline constexpr int kExitInputError = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace glres
