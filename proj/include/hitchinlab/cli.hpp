#ifndef HITCHINLAB_CLI_HPP
#define HITCHINLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hitchinlab/config.hpp"

namespace hitchinlab::cli {

// exit codes: 0 all checks pass, 1 an identity or drift check failed,
// 2 input / usage errors
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv);

} // namespace hitchinlab::cli

#endif
