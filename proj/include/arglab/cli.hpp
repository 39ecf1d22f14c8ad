#ifndef ARGLAB_CLI_HPP
#define ARGLAB_CLI_HPP

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace arglab::cli {

// Runs one CLI invocation. args holds the command line without the program
// name. Results go to out, diagnostics to err.
//
// Exit codes:
//   0  success
//   1  usage error (unknown flag, missing subcommand, bad scheme name, ...)
//   2  input error (malformed file, undeclared argument, off-vocabulary query)
//   3  oracle mismatch, or framework too large for --oracle-check
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rebuilds the text rendering from a --format json report. run() produces
// its text output through this function, so the two formats carry the same
// information by construction.
std::string render_text(const nlohmann::ordered_json& report);

} // namespace arglab::cli

#endif
