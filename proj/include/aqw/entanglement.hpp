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
#include <vector>

#include "aqw/walker_state.hpp"

/**
 * @file
 * Position-space entanglement of the 3D walk after tracing out the coin.
 *
 * rho = |psi_u><psi_u| + |psi_d><psi_d| has rank <= 2, so its partial
 * transpose is supported on S_A (x) S_B where S_A is spanned by the conjugated
 * columns and S_B by the rows of the two amplitude matrices reshaped across
 * the cut. Eigenvalues are computed on that subspace only.
 */

namespace aqw {

/// Per-axis dimension accounting used both for the reduced grid and for the
/// negativity normalisation.
enum class AxisDims {
    /// Only sites of the parity the step count allows: t + 1 per axis for a
    /// walk started on a single site.
    parity,
    /// Every site of the support box: 2t + 1 per axis.
    full,
};

const char *axis_dims_name(AxisDims m);

struct ReducedPositionState {
    std::array<std::size_t, 3> dims{};
    /// Row-major (x1, x2, x3) over the reduced grid.
    std::vector<cplx> psi_u, psi_d;
    AxisDims mode = AxisDims::parity;
    std::int64_t t = 0;

    double trace() const;
};

/// Throws std::invalid_argument unless N = 3. In parity mode, also throws if
/// some axis carries amplitude on both parities.
ReducedPositionState reduce_coin(const WalkerState &state,
                                 AxisDims mode = AxisDims::parity);

/// Trace norm of rho^{T_axis} (partial transpose over axis `axis`, 0-based).
double partial_transpose_trace_norm(const ReducedPositionState &rho, std::size_t axis);

/// (||rho^{T_axis}||_1 - 1) / (d_min - 1), d_min = min(d_axis, d_j d_k).
/// Zero when d_min = 1. Values within 1e-12 of zero are returned as exactly
/// zero; anything more negative raises NumericalError.
double negativity(const ReducedPositionState &rho, std::size_t axis);

struct NegativityResult {
    double n_1_23 = 0.0;
    double n_2_13 = 0.0;
    double n_3_12 = 0.0;
    /// Geometric mean of the three.
    double n3 = 0.0;
    std::int64_t t = 0;
    std::array<std::size_t, 3> dims{};
    AxisDims mode = AxisDims::parity;
};

NegativityResult tripartite_negativity(const WalkerState &state,
                                       AxisDims mode = AxisDims::parity);

} // namespace aqw
