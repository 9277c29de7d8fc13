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

#include <random>
#include <vector>

#include "aqw/walker_state.hpp"
#include "oracles/oracles.hpp"

namespace testutil {

inline std::vector<std::array<double, 3>> abt_of(const aqw::CoinParams &c) {
    std::vector<std::array<double, 3>> out;
    for (const auto &a : c.axes()) {
        out.push_back({a.alpha, a.beta, a.theta});
    }
    return out;
}

inline aqw::CoinParams random_coins(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> ang(-aqw::pi, aqw::pi);
    std::vector<aqw::AxisCoin> axes;
    for (std::size_t i = 0; i < n; ++i) {
        axes.emplace_back(ang(rng), ang(rng), ang(rng));
    }
    return aqw::CoinParams(axes);
}

/// Normalised random amplitudes over `box`.
inline aqw::WalkerState random_state(std::mt19937_64 &rng, const aqw::Box &box) {
    std::normal_distribution<double> g;
    aqw::WalkerState s(box);
    for (std::size_t i = 0; i < box.volume(); ++i) {
        s.u()[i] = {g(rng), g(rng)};
        s.d()[i] = {g(rng), g(rng)};
    }
    const double k = 1.0 / std::sqrt(s.norm2());
    for (std::size_t i = 0; i < box.volume(); ++i) {
        s.u()[i] *= k;
        s.d()[i] *= k;
    }
    return s;
}

inline oracle::SparseWalker to_sparse(const aqw::WalkerState &s) {
    oracle::SparseWalker w;
    for (aqw::SiteCursor c(s.box()); !c.done(); c.next()) {
        const auto sp = s.at(c.site());
        if (sp.u != aqw::cplx{} || sp.d != aqw::cplx{}) {
            w[oracle::Site(c.site().begin(), c.site().end())] = {sp.u, sp.d};
        }
    }
    return w;
}

/// Largest amplitude difference between a dense state and a sparse map.
inline double max_diff(const aqw::WalkerState &s, const oracle::SparseWalker &w) {
    double worst = 0.0;
    for (const auto &[x, a] : w) {
        const aqw::Site site(x.begin(), x.end());
        const auto sp = s.at(site);
        worst = std::max({worst, std::abs(sp.u - a[0]), std::abs(sp.d - a[1])});
    }
    for (aqw::SiteCursor c(s.box()); !c.done(); c.next()) {
        const oracle::Site x(c.site().begin(), c.site().end());
        if (!w.count(x)) {
            const auto sp = s.at(c.site());
            worst = std::max({worst, std::abs(sp.u), std::abs(sp.d)});
        }
    }
    return worst;
}

} // namespace testutil
