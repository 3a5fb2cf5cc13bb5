#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hasse {

// Argv-style front door shared by the binary and the tests.  `args` excludes
// the program name.  Machine-readable records go to `out` one JSON object
// per line; human summaries and diagnostics go to `err`.  Returns the
// process exit code: 0 when every requested verdict holds, 1 when some
// verdict is false or a domain bound/precondition fails, 2 on malformed
// input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hasse
