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

#include <optional>
#include <vector>

#include "aqw/dispersion.hpp"

namespace aqw {

/// Conical degeneracy of the two bands.
struct DiabolicalPoint {
    Pseudomomentum q;
    double gap = 0.0;
    /// Common quasi-frequency of the two branches at q.
    double omega = 0.0;
    /// Principal cone slopes (ascending): half the gap grows as slope * |dq|
    /// along the corresponding eigendirection of the fitted quadratic form.
    std::vector<double> slopes;
};

struct DiabolicalSearch {
    int grid = 64;
    double tol = 1e-8;
    /// Keep only degeneracies at this quasi-frequency (within 1e-6).
    std::optional<double> omega;
    /// Points closer than this (per component, on the circle) are merged.
    double dedup_radius = 1e-3;
};

/// Grid scan of the band gap followed by simplex refinement of every periodic
/// local minimum. Results are sorted lexicographically by q. Requires N in
/// {2, 3} and grid >= 16.
std::vector<DiabolicalPoint> find_diabolical_points(const CoinParams &coins,
                                                    const DiabolicalSearch &opts = {});

/// Least-squares fit of (gap/2)^2 = dq^T B dq on a small stencil around q;
/// returns sqrt of the eigenvalues of B in ascending order.
std::vector<double> cone_slopes(const Pseudomomentum &q, const CoinParams &coins,
                                double eps = 1e-3);

/// Largest |grad omega| over both branches on a sphere of `radius` around q
/// (circle of 64 directions for N = 2, 200-point Fibonacci sphere for N = 3).
double cone_max_speed(const Pseudomomentum &q, const CoinParams &coins,
                      double radius = 0.05);

/// Unit directions used by `cone_max_speed`.
std::vector<std::vector<double>> sphere_directions(std::size_t n_dims);

} // namespace aqw
