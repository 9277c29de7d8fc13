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

#include <string>
#include <string_view>
#include <vector>

#include "aqw/types.hpp"

namespace aqw {

/// Evaluates a small arithmetic expression over complex numbers: decimal
/// literals, `pi` (or the Greek letter), `i`, `sqrt2`, `sqrt(...)`, + - * /,
/// parentheses and implicit multiplication ("3pi/4", "2i"). Throws
/// ConfigError naming `what` on malformed input.
cplx parse_complex(std::string_view text, const std::string &what = "value");

/// As `parse_complex` but requires a real result (|imag| == 0).
double parse_real(std::string_view text, const std::string &what = "value");

/// Splits on commas that are not nested in parentheses; trims whitespace.
std::vector<std::string> split_list(std::string_view text);

} // namespace aqw
