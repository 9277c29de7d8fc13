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

#include <cstdint>
#include <vector>

#include "aqw/box.hpp"
#include "aqw/grover.hpp"
#include "aqw/walker_state.hpp"

namespace aqw {

/// Site probabilities over a box, in the box's flat order.
struct ProbabilityField {
    Box box;
    std::vector<double> p;
    std::int64_t t = 0;

    std::size_t n_dims() const { return box.n_dims(); }
    double at(std::span<const Coord> x) const {
        return box.contains(x) ? p[box.index(x)] : 0.0;
    }
    double total() const { return stable_sum(p); }
};

ProbabilityField probability_field(const WalkerState &state);
ProbabilityField probability_field(const GroverState2D &state);

/// Sums out every axis except `a` and `b` (0-based, distinct). The result is
/// indexed (x_a, x_b) in that order.
ProbabilityField marginal_projection(const ProbabilityField &field, std::size_t a,
                                     std::size_t b);

struct MomentSummary {
    std::vector<double> mean;
    /// Row-major N x N.
    std::vector<double> covariance;
    /// Largest over smallest covariance eigenvalue, minus one. Zero for a
    /// vanishing covariance, +inf when only the smallest eigenvalue vanishes.
    double anisotropy = 0.0;

    double cov(std::size_t i, std::size_t j) const {
        return covariance[i * mean.size() + j];
    }
};

MomentSummary moments(const ProbabilityField &field);

struct RadialBin {
    /// Mass-weighted mean radius of the bin; the bin's lower edge if empty.
    double radius = 0.0;
    double mass = 0.0;
};

/// Histogram of a 2D field by Euclidean distance from `center`; bin k holds
/// radii in [k w, (k + 1) w).
std::vector<RadialBin> radial_profile(const ProbabilityField &field2d,
                                      const std::vector<double> &center,
                                      double bin_width = 1.0);

/// Mass-weighted radius of the heaviest bin together with its two neighbours.
double peak_radius(const std::vector<RadialBin> &profile);

/// Per axis i: sum_x |P(x) - P(R_i x)| / 2, with R_i the reflection
/// x_i -> 2 c_i - x_i. Each score lies in [0, 1].
std::vector<double> asymmetry_metrics(const ProbabilityField &field,
                                      const std::vector<double> &center = {});

} // namespace aqw
