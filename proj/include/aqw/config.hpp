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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqw/entanglement.hpp"
#include "aqw/grover.hpp"
#include "aqw/types.hpp"

namespace aqw {

inline constexpr const char *tool_version = "1.0.0";

enum class Command { evolve, dispersion, dp_scan, negativity, grover_compare };

const char *command_name(Command c);
Command command_from_name(const std::string &name);

enum class InitKind { localized, gaussian };

/// Fully resolved run configuration. Every field has a default; angles are
/// stored in radians as given (coin angles are canonicalised by CoinParams).
struct RunConfig {
    Command command = Command::evolve;
    std::size_t dims = 2;
    std::int64_t steps = 10;
    std::vector<double> theta, alpha, beta;

    InitKind init = InitKind::localized;
    double sigma = 7.0;
    double truncation = 5.0;
    CoinSpinor spinor;
    std::vector<std::int64_t> center;
    /// Carrier pseudo-momentum of a Gaussian packet.
    std::vector<double> carrier;
    /// When true the carrier is given in phase-free frame coordinates.
    bool carrier_frame = true;

    std::string out = ".";
    std::string prefix = "aqw";
    int grid = 64;
    /// Mesh used for the Grover-QW(3) comparison (cost grows as grid^3).
    int grid3 = 16;
    double tol = 1e-8;
    std::optional<double> omega;
    AxisDims axis_dims = AxisDims::parity;
    Coin4 grover_coin{cplx{0.5}, cplx{-0.5}, cplx{-0.5}, cplx{0.5}};
    /// Write the full field CSV; by default only for N <= 2.
    std::optional<bool> write_field;

    CoinParams coins() const;
    bool operator==(const RunConfig &) const = default;
};

/// Builds a config from a flat JSON object, rejecting unknown keys and
/// validating every field. Throws ConfigError naming the offending key.
RunConfig config_from_json(const nlohmann::json &obj);

/// File keys first, then `overrides` replacing them key by key.
RunConfig parse_config(const std::optional<std::string> &file,
                       const nlohmann::json &overrides);

/// Flat JSON that `config_from_json` maps back to an identical config.
nlohmann::json config_to_json(const RunConfig &c);

} // namespace aqw
