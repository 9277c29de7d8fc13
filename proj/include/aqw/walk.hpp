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

#include "aqw/simd/kernels.hpp"
#include "aqw/types.hpp"
#include "aqw/walker_state.hpp"

/**
 * @file
 * One-step evolution of the N-dimensional alternate quantum walk.
 *
 * A full step applies, for axis 0..N-1 in order, the coin of that axis
 * followed by the conditional shift along it (u moves +1, d moves -1).
 * `apply_coin`, `apply_shift` and `step` are straightforward reference
 * implementations returning new states; `evolve` is the fused in-place
 * path used for long runs and is tested against them.
 */

namespace aqw {

/// [[cos t, e^{ia} sin t], [e^{ib} sin t, -e^{i(a+b)} cos t]] in basis (u, d).
Mat2 coin_matrix(const AxisCoin &c);

/// Multiplies every site's spinor by the coin of `axis` (0-based).
WalkerState apply_coin(const WalkerState &state, const CoinParams &coins,
                       std::size_t axis);

/// Conditional displacement along `axis`; the box grows by one site on both
/// sides of that axis.
WalkerState apply_shift(const WalkerState &state, std::size_t axis);

/// One full step, composed operator by operator. Increments the time.
WalkerState step(const WalkerState &state, const CoinParams &coins);

/// `steps` full steps using the fused kernels. The result box equals the
/// input box grown by `steps` on every axis, exactly as repeated `step`.
WalkerState evolve(const WalkerState &state, const CoinParams &coins,
                   std::int64_t steps);
WalkerState evolve(const WalkerState &state, const CoinParams &coins,
                   std::int64_t steps, const simd::KernelSet &kernels);

/// Diagnostic: maximum |P_a(x) - P_b(x)| after `steps` between runs that
/// differ only in alpha of axis 0 (coins[0].alpha vs `alpha1`).
double alpha1_probability_probe(const WalkerState &initial,
                                const CoinParams &coins, double alpha1,
                                std::int64_t steps);

} // namespace aqw
