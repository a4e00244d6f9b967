#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace etapair::cli {

/// Runs one experiment subcommand; args exclude the program name.
/// Writes CSV (default) or JSON (--format json) to `out`.
/// Returns 0 on success, 2 on usage errors, 1 on domain/capacity errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace etapair::cli
