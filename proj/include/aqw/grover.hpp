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
#include <span>
#include <vector>

#include "aqw/box.hpp"
#include "aqw/simd/kernels.hpp"
#include "aqw/types.hpp"

namespace aqw {

/// Coin vector of the 2D Grover walk.
using Coin4 = std::array<cplx, 4>;

/// Displacement of coin component k (bits k1 k0): ((-1)^k1, (-1)^k0).
std::array<Coord, 2> grover_displacement(std::size_t k);

/// Reference walk with a 4-dim coin on the square lattice, used for the
/// comparison with the 2D alternate walk. The coin acts as
/// a_k <- a_k - (sum_j a_j) / 2, i.e. matrix entries delta_jk - 1/2.
class GroverState2D {
  public:
    GroverState2D() = default;
    explicit GroverState2D(Box box, std::int64_t t = 0);

    /// Coin vector `c` at site `x`.
    static GroverState2D localized(const Site &x, const Coin4 &c);

    std::int64_t time() const { return t_; }
    void set_time(std::int64_t t) { t_ = t; }
    const Box &box() const { return box_; }

    std::span<cplx> component(std::size_t k) { return a_[k]; }
    std::span<const cplx> component(std::size_t k) const { return a_[k]; }

    double norm2() const;
    /// Site probabilities sum_k |a_k|^2 in flat box order.
    std::vector<double> probabilities() const;

    GroverState2D embedded(const Box &larger) const;

  private:
    Box box_;
    std::int64_t t_ = 0;
    std::array<std::vector<cplx>, 4> a_;
};

/// One step: coin then diagonal displacement; box grows by one on each side.
GroverState2D grover_step(const GroverState2D &state);

/// Fused in-place multi-step evolution (kernel-dispatched coin).
GroverState2D grover_evolve(const GroverState2D &state, std::int64_t steps);
GroverState2D grover_evolve(const GroverState2D &state, std::int64_t steps,
                            const simd::KernelSet &kernels);

} // namespace aqw
