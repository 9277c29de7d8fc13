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

#include "aqw/grover.hpp"

#include <algorithm>
#include <stdexcept>

#include "aqw/walker_state.hpp"

namespace aqw {

std::array<Coord, 2> grover_displacement(std::size_t k) {
    return {(k >> 1) & 1U ? -1 : 1, k & 1U ? -1 : 1};
}

GroverState2D::GroverState2D(Box box, std::int64_t t)
    : box_(std::move(box)), t_(t) {
    if (box_.n_dims() != 2) {
        throw std::invalid_argument("GroverState2D requires a 2-d box");
    }
    for (auto &c : a_) {
        c.assign(box_.volume(), cplx{});
    }
}

GroverState2D GroverState2D::localized(const Site &x, const Coin4 &c) {
    GroverState2D s(Box::point(x));
    for (std::size_t k = 0; k < 4; ++k) {
        s.a_[k][0] = c[k];
    }
    return s;
}

double GroverState2D::norm2() const {
    CompensatedSum s;
    for (std::size_t i = 0; i < box_.volume(); ++i) {
        s.add(std::norm(a_[0][i]) + std::norm(a_[1][i]) + std::norm(a_[2][i]) +
              std::norm(a_[3][i]));
    }
    return s.value();
}

std::vector<double> GroverState2D::probabilities() const {
    std::vector<double> p(box_.volume());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::norm(a_[0][i]) + std::norm(a_[1][i]) + std::norm(a_[2][i]) +
               std::norm(a_[3][i]);
    }
    return p;
}

GroverState2D GroverState2D::embedded(const Box &larger) const {
    GroverState2D out(larger, t_);
    for (SiteCursor c(box_); !c.done(); c.next()) {
        const std::size_t j = larger.index(c.site());
        for (std::size_t k = 0; k < 4; ++k) {
            out.a_[k][j] = a_[k][c.index()];
        }
    }
    return out;
}

GroverState2D grover_step(const GroverState2D &state) {
    const Box &src = state.box();
    GroverState2D out(src.grown_all(1), state.time() + 1);
    const Box &dst = out.box();
    Site x(2);
    for (SiteCursor c(src); !c.done(); c.next()) {
        const std::size_t i = c.index();
        cplx sum{};
        for (std::size_t k = 0; k < 4; ++k) {
            sum += state.component(k)[i];
        }
        for (std::size_t k = 0; k < 4; ++k) {
            const auto dx = grover_displacement(k);
            x[0] = c.site()[0] + dx[0];
            x[1] = c.site()[1] + dx[1];
            out.component(k)[dst.index(x)] =
                state.component(k)[i] - 0.5 * sum;
        }
    }
    return out;
}

GroverState2D grover_evolve(const GroverState2D &state, std::int64_t steps) {
    return grover_evolve(state, steps, simd::active());
}

GroverState2D grover_evolve(const GroverState2D &state, std::int64_t steps,
                            const simd::KernelSet &kernels) {
    if (steps < 0) {
        throw std::invalid_argument("grover_evolve: negative step count");
    }
    if (steps == 0) {
        return state;
    }
    GroverState2D out = state.embedded(state.box().grown_all(steps));
    const Box &box = out.box();
    std::array<std::span<cplx>, 4> comps;
    std::array<std::ptrdiff_t, 4> offset{};
    for (std::size_t k = 0; k < 4; ++k) {
        comps[k] = out.component(k);
        const auto dx = grover_displacement(k);
        offset[k] = dx[0] * static_cast<std::ptrdiff_t>(box.stride(0)) +
                    dx[1] * static_cast<std::ptrdiff_t>(box.stride(1));
    }
    for (std::int64_t s = 0; s < steps; ++s) {
        kernels.grover4(comps);
        for (std::size_t k = 0; k < 4; ++k) {
            auto &c = comps[k];
            const std::ptrdiff_t off = offset[k];
            if (off > 0) {
                std::copy_backward(c.begin(), c.end() - off, c.end());
                std::fill_n(c.begin(), off, cplx{});
            } else {
                std::copy(c.begin() - off, c.end(), c.begin());
                std::fill(c.end() + off, c.end(), cplx{});
            }
        }
    }
    out.set_time(state.time() + steps);
    return out;
}

} // namespace aqw
