// Copyright 2026 The AQW Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "aqw/config.hpp"
#include "aqw/walker_state.hpp"

namespace aqw {

enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_numerical = 3,
    exit_io = 4,
};

/// Maps an exception raised while configuring or running to an exit code.
int exit_code_for(const std::exception_ptr &e);

/// Initial walker described by the config.
WalkerState initial_state(const RunConfig &c);

/// Runs the command and returns the paths written, in creation order.
/// Throws ConfigError, NumericalError, DegeneratePointError or IoError.
std::vector<std::string> execute(const RunConfig &c);

/// `execute` with errors reported on `err` and mapped to exit codes.
int run(const RunConfig &c, std::ostream &err);

} // namespace aqw
