#ifndef GKT_CLI_HPP
#define GKT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gkt::cli {

/// Exit codes: 0 success/decided, 2 Unknown or none-within-bounds, 1 error.
constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_unknown = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gkt::cli

#endif
