#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbf {

// Runs the pbftool command line: subcommands space | graph | sample |
// nondecomp | sbox | formulas. Returns the process exit code; all output
// goes to the given streams (tests drive this in-process).
int cli_run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pbf
