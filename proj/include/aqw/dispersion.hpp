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
#include <utility>
#include <vector>

#include "aqw/types.hpp"

/**
 * @file
 * Band structure of the alternate walk.
 *
 * Under the plane-wave ansatz exp(i(q.x - omega t)) one full step acts on the
 * coin spinor as U(q) = S_N C_N ... S_1 C_1 with S_i = diag(e^{-iq_i}, e^{iq_i});
 * the quasi-frequencies are minus the eigenphases of U(q).
 *
 * Coin phases only translate the bands. With u_i = q_i + (beta_i +
 * alpha_{i+1})/2 (indices cyclic) and Omega = omega + sum_i(alpha_i+beta_i)/2,
 * the spectrum depends on theta_i and the u_i alone. Branch labels follow that
 * frame: for even N, Omega(+/-) = +/-kappa with kappa in [0, pi]; for odd N,
 * Omega(+) in [-pi/2, pi/2] and Omega(-) = pi - Omega(+).
 */

namespace aqw {

/// Pseudo-momentum with every component canonicalised into (-pi, pi].
class Pseudomomentum {
  public:
    Pseudomomentum() = default;
    explicit Pseudomomentum(std::vector<double> q);

    std::size_t size() const { return q_.size(); }
    double operator[](std::size_t i) const { return q_[i]; }
    const std::vector<double> &values() const { return q_; }

    bool operator==(const Pseudomomentum &) const = default;

  private:
    std::vector<double> q_;
};

/// Translation that removes the coin phases: frame = q + dq, Omega = omega + domega.
struct ShiftedFrame {
    std::vector<double> dq;
    double domega = 0.0;

    std::vector<double> to_frame(const std::vector<double> &q) const;
    /// Inverse map, canonicalised into the Brillouin zone.
    Pseudomomentum from_frame(const std::vector<double> &frame) const;
};

ShiftedFrame shifted_frame(const CoinParams &coins);

/// Quasi-frequencies and eigenvectors at one pseudo-momentum.
struct DispersionSample {
    Pseudomomentum q;
    double omega_plus = 0.0;
    double omega_minus = 0.0;
    CoinSpinor eigvec_plus;
    CoinSpinor eigvec_minus;
    /// Circular distance between the two branches, accurate near degeneracies.
    double gap = 0.0;
};

enum class Branch { plus, minus };

Mat2 momentum_step_matrix(const Pseudomomentum &q, const CoinParams &coins);

/// Numerical route: eigen-decomposition of the momentum step matrix.
DispersionSample dispersion_sample(const Pseudomomentum &q,
                                   const CoinParams &coins);

double branch_omega(const DispersionSample &s, Branch b);

/// sin Omega = cos t sin u (N = 1).
std::pair<double, double> closed_form_omega1(const Pseudomomentum &q,
                                             const CoinParams &coins);
/// cos Omega = c1 c2 cos(u+v) + s1 s2 cos(u-v) (N = 2).
std::pair<double, double> closed_form_omega2(const Pseudomomentum &q,
                                             const CoinParams &coins);
/// sin Omega = c1[c2 c3 sin(u+v+w) + s2 s3 sin(u-v+w)]
///           + s1[c2 s3 sin(u+v-w) - s2 c3 sin(u-v-w)]   (N = 3).
std::pair<double, double> closed_form_omega3(const Pseudomomentum &q,
                                             const CoinParams &coins);
/// Dispatches on N (1..3). Returns (omega_plus, omega_minus).
std::pair<double, double> closed_form_omega(const Pseudomomentum &q,
                                            const CoinParams &coins);

/// Clamps an arccos/arcsin argument into [-1, 1]; excursions larger than
/// 1e-12 raise NumericalError.
double clamp_unit(double x);

/// Central-difference gradient of one branch (h = 1e-5). Throws
/// DegeneratePointError when the gap at q is <= 1e-6.
std::vector<double> group_velocity(const Pseudomomentum &q, Branch branch,
                                   const CoinParams &coins, double h = 1e-5);

/// Largest |grad omega| over a grid^N scan of the Brillouin zone, both
/// branches, skipping points within 1e-6 of a degeneracy.
double max_group_speed(const CoinParams &coins, int grid);

/// Sample points k = 0..grid-1 at -pi + (k + 1) 2pi/grid, i.e. in (-pi, pi].
std::vector<double> zone_axis(int grid);
/// Same but shifted by half a cell (avoids landing exactly on high-symmetry points).
std::vector<double> zone_axis_offset(int grid);

/// Band surfaces over a grid^N mesh, rows in lexicographic q order.
std::vector<DispersionSample> dispersion_grid(const CoinParams &coins, int grid);

} // namespace aqw
