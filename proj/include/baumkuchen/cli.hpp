#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baumkuchen {

enum ExitCode : int {
    exit_ok = 0,
    exit_failed = 1,
    exit_invalid_input = 2,
    exit_numeric = 3,
};

/// Environment variable consulted for the default Monte Carlo seed.
inline constexpr const char* seed_env_var = "BAUMKUCHEN_SEED";

/// Runs one command line (args[0] is the program name). Documents go to
/// `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace baumkuchen
