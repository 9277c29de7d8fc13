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

#include "aqw/walker_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aqw {

WalkerState::WalkerState(Box box, std::int64_t t)
    : box_(std::move(box)), t_(t), u_(box_.volume()), d_(box_.volume()) {}

CoinSpinor WalkerState::at(std::span<const Coord> x) const {
    if (!box_.contains(x)) {
        return {cplx{}, cplx{}};
    }
    const std::size_t i = box_.index(x);
    return {u_[i], d_[i]};
}

void WalkerState::set(std::span<const Coord> x, CoinSpinor s) {
    if (!box_.contains(x)) {
        throw std::out_of_range("WalkerState::set: site outside support box");
    }
    const std::size_t i = box_.index(x);
    u_[i] = s.u;
    d_[i] = s.d;
}

double WalkerState::norm2() const {
    CompensatedSum s;
    for (std::size_t i = 0; i < u_.size(); ++i) {
        s.add(std::norm(u_[i]) + std::norm(d_[i]));
    }
    return s.value();
}

WalkerState WalkerState::embedded(const Box &larger) const {
    WalkerState out(larger, t_);
    // Rows along the last axis are contiguous in both boxes.
    const std::size_t n = box_.n_dims();
    const std::size_t row = box_.extent(n - 1);
    Site x = box_.lo();
    for (std::size_t i = 0; i < box_.volume(); i += row) {
        box_.site_of(i, x);
        if (!larger.contains(x)) {
            throw std::invalid_argument("embedded: target box too small");
        }
        const std::size_t j = larger.index(x);
        std::copy_n(u_.begin() + static_cast<std::ptrdiff_t>(i), row,
                    out.u_.begin() + static_cast<std::ptrdiff_t>(j));
        std::copy_n(d_.begin() + static_cast<std::ptrdiff_t>(i), row,
                    out.d_.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return out;
}

double stable_sum(std::span<const double> v) {
    CompensatedSum s;
    for (double x : v) {
        s.add(x);
    }
    return s.value();
}

} // namespace aqw
