#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balfam::cli {

// Dispatches the subcommands (find, verify, brute, scan, gen). Machine
// output goes to `out`, diagnostics to `err`. Exit codes: 0 success /
// found / verified; 1 not-found / invalid certificate / counterexample;
// 2 input or usage error.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace balfam::cli
