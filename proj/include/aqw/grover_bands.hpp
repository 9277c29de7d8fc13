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

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <vector>

#include "aqw/dispersion.hpp"
#include "aqw/grover.hpp"

/**
 * @file
 * Band structure of the Grover walks and its comparison with the alternate
 * walk.
 *
 * The Grover momentum step matrix is diag(e^{-i q.n_k}) G with G the coin
 * (entries delta_jk - 2/2^N) and n_k the diagonal displacement of component k.
 * Its propagating bands are written in rotated coordinates (u, v) =
 * (q1 + q2, q1 - q2).
 */

namespace aqw {

Eigen::Matrix4cd grover_momentum_matrix(double q1, double q2);

/// Eigenphases -arg(lambda) of the 2D Grover momentum matrix, ascending.
std::array<double, 4> grover_eigenphases(double q1, double q2);

/// {0, pi, +arccos((cos u + cos v)/2), -arccos(...)}.
std::array<double, 4> grover_omega(double u, double v);

/// Smallest over matchings of the largest circular distance between two
/// four-element sets of angles.
double matched_deviation(const std::array<double, 4> &a,
                         const std::array<double, 4> &b);

/// Max over a grid^2 mesh of the deviation between the numerical Grover bands
/// and `grover_omega` at (u, v) = (q1 + q2, q1 - q2).
double grover_band_deviation(int grid);

/// Max over a grid^2 mesh of the frame coordinates (u, v) of the alternate
/// walk of the matched deviation between {0, pi, omega+, omega-} of the
/// alternate walk and the numerical Grover bands at q = (u, v), i.e. at
/// rotated coordinates (u + v, u - v).
double aqw_grover_isomorphism_check(const CoinParams &coins, int grid);

/// Max over an offset grid^2 mesh (which avoids band touchings) of
/// |<flat eigenvector(q)|coin>| over both flat bands.
double flat_band_projection(const Coin4 &coin, int grid);

/// Total-variation distance between the position distributions of the two
/// walks after `steps` steps from the origin.
double grover_aqw_distance(const Coin4 &grover_coin, const CoinSpinor &spinor,
                           const CoinParams &coins, std::int64_t steps);

/// Alternate-walk spinor whose distribution best matches the Grover walk
/// started from `grover_coin`, found by simplex search over
/// (cos a, e^{ib} sin a) at a short horizon.
CoinSpinor match_aqw_spinor(const Coin4 &grover_coin, const CoinParams &coins,
                            std::int64_t fit_steps = 8);

/// Eight-component Grover walk in 3D: coin delta_jk - 1/4, component k
/// (bits k2 k1 k0) displaced by ((-1)^k2, (-1)^k1, (-1)^k0).
Eigen::Matrix<std::complex<double>, 8, 8> grover3_momentum_matrix(
    const std::array<double, 3> &q);

std::array<double, 8> grover3_eigenphases(const std::array<double, 3> &q);

/// Linear map from frame coordinates (u, v, w) of the alternate walk to a
/// Grover momentum.
struct MomentumMapping {
    const char *name;
    std::array<std::array<double, 3>, 3> m;
};

/// Identity, the four (u +/- v +/- w) row combinations, and their halves.
std::vector<MomentumMapping> grover3_mappings();

/// Max over a grid^3 mesh of how far either alternate-walk branch lies from
/// the nearest Grover eigenphase at the mapped momentum. Small values would
/// mean the alternate bands are contained in the Grover spectrum.
double grover3_deviation(const CoinParams &coins, const MomentumMapping &map,
                         int grid);

} // namespace aqw
