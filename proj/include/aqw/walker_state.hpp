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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "aqw/box.hpp"
#include "aqw/types.hpp"

namespace aqw {

/// Coin-qubit walker on a dense box of lattice sites. Amplitudes are stored as
/// two structure-of-arrays fields (u and d) in the box's flat order.
class WalkerState {
  public:
    WalkerState() = default;
    /// All-zero state over `box` at step `t`.
    explicit WalkerState(Box box, std::int64_t t = 0);

    std::size_t n_dims() const { return box_.n_dims(); }
    std::int64_t time() const { return t_; }
    void set_time(std::int64_t t) { t_ = t; }
    const Box &box() const { return box_; }

    std::span<cplx> u() { return u_; }
    std::span<cplx> d() { return d_; }
    std::span<const cplx> u() const { return u_; }
    std::span<const cplx> d() const { return d_; }

    /// Spinor at `x`; zero outside the box.
    CoinSpinor at(std::span<const Coord> x) const;
    void set(std::span<const Coord> x, CoinSpinor s);

    /// Sum over sites of |u|^2 + |d|^2 (compensated summation).
    double norm2() const;

    /// Same amplitudes embedded in a box that contains the current one.
    WalkerState embedded(const Box &larger) const;

  private:
    Box box_;
    std::int64_t t_ = 0;
    std::vector<cplx> u_, d_;
};

/// Neumaier-compensated accumulator; deterministic for a given input order.
class CompensatedSum {
  public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double stable_sum(std::span<const double> v);

} // namespace aqw
