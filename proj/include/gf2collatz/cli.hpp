#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2collatz::cli {

// Runs one invocation (args excludes argv[0]). Human-readable results go to
// `out`, diagnostics to `err`. Exit status: 0 success, 1 runtime error,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gf2collatz::cli
