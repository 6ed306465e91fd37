#pragma once
// Command-line front end. Every subcommand writes its result to `out`, one
// item per line; failures write a single `error: ...` line to `err` and
// return nonzero.

#include <ostream>
#include <string>
#include <vector>

namespace giant::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace giant::cli
