#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelcat::cli {

/// The whole command line front end. `args` excludes the program name.
/// Returns the process exit code.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelcat::cli
