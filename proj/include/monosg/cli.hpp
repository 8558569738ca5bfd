// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#ifndef MONOSG_CLI_HPP_
#define MONOSG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace monosg::cli {

/// Dispatches one command line (without the program name). Answers go to
/// `out`, diagnostics to `err`. Exit codes: 0 success or true-ish answer,
/// 1 false-ish answer (not-equal / not-member), 2 input error,
/// 3 validation or oracle failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace monosg::cli

#endif  // MONOSG_CLI_HPP_
