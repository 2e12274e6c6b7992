#pragma once

#include <iosfwd>

namespace fp::cli {

// Parses argv, runs exactly one subcommand, writes the report to out and
// diagnostics to err.  Returns 0 on success, 1 when a verification
// subcommand ran and the check failed, 2 on unusable arguments or input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fp::cli
