#ifndef POINTLIKE_CLI_HPP
#define POINTLIKE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pointlike {

/// Runs the command-line interface on an argument list (without argv[0]).
/// Verdicts go to `out`, diagnostics to `err`. Exit status: 0 = computed
/// (any verdict), 2 = input error, 3 = resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pointlike

#endif  // POINTLIKE_CLI_HPP
