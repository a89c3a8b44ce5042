#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thhseg::cli {

enum ExitCode : int { Ok = 0, Failed = 1, Usage = 2, Resource = 3 };

/// Runs the thhseg command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thhseg::cli
