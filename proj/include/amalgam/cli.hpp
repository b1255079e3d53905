// Copyright 2026 The Amalgam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace amalgam::cli {

enum ExitCode : int {
    kOk = 0,        // success, or the verdict holds
    kNegative = 1,  // the checked property fails
    kUsage = 2,     // bad arguments or malformed input
};

/// Runs one command line (without the program name) and returns its exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amalgam::cli
