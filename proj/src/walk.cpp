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

#include "aqw/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aqw {

AxisCoin::AxisCoin(double a, double b, double t)
    : alpha(wrap_angle(a)), beta(wrap_angle(b)), theta(wrap_angle(t)) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(t)) {
        throw std::invalid_argument("AxisCoin: angles must be finite");
    }
}

CoinParams::CoinParams(std::vector<AxisCoin> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) {
        throw std::invalid_argument("CoinParams: at least one axis required");
    }
}

CoinParams CoinParams::uniform(std::size_t n_dims, double theta) {
    return CoinParams(std::vector<AxisCoin>(n_dims, AxisCoin(0.0, 0.0, theta)));
}

CoinParams CoinParams::from_thetas(const std::vector<double> &thetas) {
    std::vector<AxisCoin> axes;
    axes.reserve(thetas.size());
    for (double t : thetas) {
        axes.emplace_back(0.0, 0.0, t);
    }
    return CoinParams(std::move(axes));
}

double CoinParams::phase_sum() const {
    double s = 0.0;
    for (const auto &a : axes_) {
        s += a.alpha + a.beta;
    }
    return s;
}

Mat2 coin_matrix(const AxisCoin &c) {
    const double ct = std::cos(c.theta);
    const double st = std::sin(c.theta);
    const cplx ea = std::polar(1.0, c.alpha);
    const cplx eb = std::polar(1.0, c.beta);
    const cplx eab = std::polar(1.0, c.alpha + c.beta);
    return Mat2{{ct, ea * st, eb * st, -eab * ct}};
}

namespace {

void check_axis(const WalkerState &state, std::size_t axis) {
    if (axis >= state.n_dims()) {
        throw std::out_of_range("axis " + std::to_string(axis) +
                                " out of range for a " +
                                std::to_string(state.n_dims()) + "-d walk");
    }
}

void check_dims(const WalkerState &state, const CoinParams &coins) {
    if (coins.n_dims() != state.n_dims()) {
        throw std::invalid_argument(
            "coin parameters have " + std::to_string(coins.n_dims()) +
            " axes but the state is " + std::to_string(state.n_dims()) + "-d");
    }
}

// In-place shift along an axis of a box that already has a zero boundary
// layer on the relevant side: u moves by +stride, d by -stride in flat order.
void shift_in_place(std::span<cplx> u, std::span<cplx> d, std::size_t stride) {
    const std::size_t n = u.size();
    std::copy_backward(u.begin(), u.end() - static_cast<std::ptrdiff_t>(stride),
                       u.end());
    std::fill_n(u.begin(), stride, cplx{});
    std::copy(d.begin() + static_cast<std::ptrdiff_t>(stride), d.end(),
              d.begin());
    std::fill_n(d.begin() + static_cast<std::ptrdiff_t>(n - stride), stride,
                cplx{});
}

} // namespace

WalkerState apply_coin(const WalkerState &state, const CoinParams &coins,
                       std::size_t axis) {
    check_axis(state, axis);
    check_dims(state, coins);
    const Mat2 m = coin_matrix(coins[axis]);
    WalkerState out = state;
    auto u = out.u();
    auto d = out.d();
    for (std::size_t i = 0; i < u.size(); ++i) {
        const cplx a = u[i], b = d[i];
        u[i] = m(0, 0) * a + m(0, 1) * b;
        d[i] = m(1, 0) * a + m(1, 1) * b;
    }
    return out;
}

WalkerState apply_shift(const WalkerState &state, std::size_t axis) {
    check_axis(state, axis);
    const Box &src = state.box();
    WalkerState out(src.grown(axis, 1), state.time());
    const Box &dst = out.box();
    auto su = state.u();
    auto sd = state.d();
    auto du = out.u();
    auto dd = out.d();
    Site x(src.n_dims());
    for (SiteCursor c(src); !c.done(); c.next()) {
        x = c.site();
        x[axis] += 1;
        du[dst.index(x)] = su[c.index()];
        x[axis] -= 2;
        dd[dst.index(x)] = sd[c.index()];
    }
    return out;
}

WalkerState step(const WalkerState &state, const CoinParams &coins) {
    check_dims(state, coins);
    WalkerState s = state;
    for (std::size_t axis = 0; axis < coins.n_dims(); ++axis) {
        s = apply_shift(apply_coin(s, coins, axis), axis);
    }
    s.set_time(state.time() + 1);
    return s;
}

WalkerState evolve(const WalkerState &state, const CoinParams &coins,
                   std::int64_t steps) {
    return evolve(state, coins, steps, simd::active());
}

WalkerState evolve(const WalkerState &state, const CoinParams &coins,
                   std::int64_t steps, const simd::KernelSet &kernels) {
    check_dims(state, coins);
    if (steps < 0) {
        throw std::invalid_argument("evolve: negative step count");
    }
    if (steps == 0) {
        return state;
    }
    // Padding by `steps` on every side keeps the layer that wraps around in
    // the flat shift empty for the whole run.
    WalkerState out = state.embedded(state.box().grown_all(steps));
    std::vector<Mat2> mats;
    for (std::size_t a = 0; a < coins.n_dims(); ++a) {
        mats.push_back(coin_matrix(coins[a]));
    }
    const Box &box = out.box();
    auto u = out.u();
    auto d = out.d();
    for (std::int64_t s = 0; s < steps; ++s) {
        for (std::size_t a = 0; a < coins.n_dims(); ++a) {
            kernels.coin(u, d, mats[a]);
            shift_in_place(u, d, box.stride(a));
        }
    }
    out.set_time(state.time() + steps);
    return out;
}

double alpha1_probability_probe(const WalkerState &initial,
                                const CoinParams &coins, double alpha1,
                                std::int64_t steps) {
    std::vector<AxisCoin> axes = coins.axes();
    axes.at(0) = AxisCoin(alpha1, axes[0].beta, axes[0].theta);
    const WalkerState a = evolve(initial, coins, steps);
    const WalkerState b = evolve(initial, CoinParams(axes), steps);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.box().volume(); ++i) {
        const double pa = std::norm(a.u()[i]) + std::norm(a.d()[i]);
        const double pb = std::norm(b.u()[i]) + std::norm(b.d()[i]);
        worst = std::max(worst, std::abs(pa - pb));
    }
    return worst;
}

} // namespace aqw
