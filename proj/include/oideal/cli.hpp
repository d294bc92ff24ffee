#ifndef OIDEAL_CLI_HPP
#define OIDEAL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace oideal {

/// Runs one CLI invocation; args excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Exit status: 0 ok, 2 validation/parse error,
/// 3 enumeration cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oideal

#endif
