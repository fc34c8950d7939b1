#ifndef SYMCI_CLI_HPP
#define SYMCI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symci::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The text printed by the `examples` subcommand.
std::string examples_text();

}  // namespace symci::cli

#endif  // SYMCI_CLI_HPP
