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

#include <vector>

#include "aqw/walker_state.hpp"

namespace aqw {

/// Gaussian wave packet with a uniform coin spinor.
struct GaussianSpec {
    /// Half width at half maximum of the probability profile, lattice units.
    double sigma_hwhm = 7.0;
    Site center;
    /// Carrier pseudo-momentum; empty means zero.
    std::vector<double> carrier_q;
    CoinSpinor spinor;
    /// Sites farther than this many sigma_hwhm from the center are left empty.
    double truncation = 5.0;
};

/// Walker on a single site. Throws std::invalid_argument for a spinor whose
/// norm differs from 1 by more than 1e-12.
WalkerState localized(const Site &x0, CoinSpinor spinor, std::size_t n_dims);

/// Amplitude ~ exp(-ln2 |x-x0|^2 / (2 sigma^2)) exp(i q.(x-x0)) spinor,
/// truncated at `truncation * sigma_hwhm` and normalised.
WalkerState gaussian_packet(const GaussianSpec &spec, std::size_t n_dims);

} // namespace aqw
