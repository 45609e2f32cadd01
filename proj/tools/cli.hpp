#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinberg::cli {

/// One leaf subcommand and the library operations it exposes.
struct SubcommandInfo {
  std::string path;  ///< e.g. "class st-forward"
  std::vector<std::string> operations;
};

const std::vector<SubcommandInfo>& registry();

/// Runs one invocation. args excludes the program name.
/// Exit status: 0 success, 1 domain or configuration error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinberg::cli
