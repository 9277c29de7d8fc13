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

#include "aqw/initial_states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aqw {
namespace {

void check_spinor(const CoinSpinor &s) {
    const double n = s.norm2();
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12) {
        throw std::invalid_argument("coin spinor must have unit norm (got |s|^2 = " +
                                    std::to_string(n) + ")");
    }
}

} // namespace

WalkerState localized(const Site &x0, CoinSpinor spinor, std::size_t n_dims) {
    check_spinor(spinor);
    if (x0.size() != n_dims || n_dims == 0) {
        throw std::invalid_argument("localized: site has " +
                                    std::to_string(x0.size()) +
                                    " coordinates, expected " +
                                    std::to_string(n_dims));
    }
    WalkerState s(Box::point(x0));
    s.set(x0, spinor);
    return s;
}

WalkerState gaussian_packet(const GaussianSpec &spec, std::size_t n_dims) {
    if (!(spec.sigma_hwhm > 0.0)) {
        throw std::invalid_argument("gaussian_packet: sigma_hwhm must be > 0");
    }
    if (!(spec.truncation > 0.0)) {
        throw std::invalid_argument("gaussian_packet: truncation must be > 0");
    }
    check_spinor(spec.spinor);
    const Site center = spec.center.empty() ? Site(n_dims, 0) : spec.center;
    if (center.size() != n_dims) {
        throw std::invalid_argument("gaussian_packet: center dimension mismatch");
    }
    std::vector<double> q = spec.carrier_q;
    if (q.empty()) {
        q.assign(n_dims, 0.0);
    }
    if (q.size() != n_dims) {
        throw std::invalid_argument("gaussian_packet: carrier dimension mismatch");
    }

    const double radius = spec.truncation * spec.sigma_hwhm;
    const auto r = static_cast<Coord>(std::floor(radius));
    Site lo(n_dims), hi(n_dims);
    for (std::size_t a = 0; a < n_dims; ++a) {
        lo[a] = center[a] - r;
        hi[a] = center[a] + r;
    }
    WalkerState s(Box(lo, hi));
    const double k = std::numbers::ln2 / (2.0 * spec.sigma_hwhm * spec.sigma_hwhm);
    auto u = s.u();
    auto d = s.d();
    for (SiteCursor c(s.box()); !c.done(); c.next()) {
        double r2 = 0.0, phase = 0.0;
        for (std::size_t a = 0; a < n_dims; ++a) {
            const auto dx = static_cast<double>(c.site()[a] - center[a]);
            r2 += dx * dx;
            phase += q[a] * dx;
        }
        if (r2 > radius * radius) {
            continue;
        }
        const cplx amp = std::polar(std::exp(-k * r2), phase);
        u[c.index()] = amp * spec.spinor.u;
        d[c.index()] = amp * spec.spinor.d;
    }
    const double scale = 1.0 / std::sqrt(s.norm2());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] *= scale;
        d[i] *= scale;
    }
    return s;
}

} // namespace aqw
