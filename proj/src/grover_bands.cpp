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

#include "aqw/grover_bands.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "aqw/initial_states.hpp"
#include "aqw/nelder_mead.hpp"
#include "aqw/walk.hpp"

namespace aqw {

Eigen::Matrix4cd grover_momentum_matrix(double q1, double q2) {
    Eigen::Matrix4cd m;
    for (int k = 0; k < 4; ++k) {
        const auto n = grover_displacement(static_cast<std::size_t>(k));
        const cplx phase = std::polar(1.0, -(q1 * static_cast<double>(n[0]) +
                                             q2 * static_cast<double>(n[1])));
        for (int j = 0; j < 4; ++j) {
            m(k, j) = phase * ((k == j ? 1.0 : 0.0) - 0.5);
        }
    }
    return m;
}

namespace {

template <int N>
std::array<double, N> phases_of(const Eigen::Matrix<cplx, N, N> &m) {
    Eigen::ComplexEigenSolver<Eigen::Matrix<cplx, N, N>> es(m, false);
    std::array<double, N> w{};
    for (int i = 0; i < N; ++i) {
        w[static_cast<std::size_t>(i)] = wrap_angle(-std::arg(es.eigenvalues()(i)));
    }
    std::sort(w.begin(), w.end());
    return w;
}

} // namespace

std::array<double, 4> grover_eigenphases(double q1, double q2) {
    return phases_of<4>(grover_momentum_matrix(q1, q2));
}

std::array<double, 4> grover_omega(double u, double v) {
    const double a = std::acos(clamp_unit(0.5 * (std::cos(u) + std::cos(v))));
    return {0.0, pi, a, -a};
}

double matched_deviation(const std::array<double, 4> &a,
                         const std::array<double, 4> &b) {
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            worst = std::max(worst, circular_distance(a[i], b[perm[i]]));
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double grover_band_deviation(int grid) {
    double worst = 0.0;
    for (double q1 : zone_axis(grid)) {
        for (double q2 : zone_axis(grid)) {
            worst = std::max(worst, matched_deviation(grover_eigenphases(q1, q2),
                                                      grover_omega(q1 + q2, q1 - q2)));
        }
    }
    return worst;
}

double aqw_grover_isomorphism_check(const CoinParams &coins, int grid) {
    if (coins.n_dims() != 2) {
        throw std::invalid_argument("isomorphism check requires N = 2");
    }
    const ShiftedFrame frame = shifted_frame(coins);
    double worst = 0.0;
    for (double u : zone_axis(grid)) {
        for (double v : zone_axis(grid)) {
            // Compare in the phase-free frame: Omega = omega + domega.
            const DispersionSample s = dispersion_sample(frame.from_frame({u, v}), coins);
            const std::array<double, 4> aqw{0.0, pi, wrap_angle(s.omega_plus + frame.domega),
                                            wrap_angle(s.omega_minus + frame.domega)};
            worst = std::max(worst, matched_deviation(aqw, grover_eigenphases(u, v)));
        }
    }
    return worst;
}

double flat_band_projection(const Coin4 &coin, int grid) {
    const Eigen::Vector4cd c(coin[0], coin[1], coin[2], coin[3]);
    double worst = 0.0;
    for (double q1 : zone_axis_offset(grid)) {
        for (double q2 : zone_axis_offset(grid)) {
            const Eigen::Matrix4cd u = grover_momentum_matrix(q1, q2);
            // Shares eigenvectors with u; the flat bands sit at cos(omega) = +/-1.
            const Eigen::Matrix4cd h = 0.5 * (u + u.adjoint());
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
            for (int col : {0, 3}) {
                worst = std::max(worst, std::abs(es.eigenvectors().col(col).dot(c)));
            }
        }
    }
    return std::min(worst, 1.0);
}

double grover_aqw_distance(const Coin4 &grover_coin, const CoinSpinor &spinor,
                           const CoinParams &coins, std::int64_t steps) {
    const Site origin{0, 0};
    const GroverState2D g =
        grover_evolve(GroverState2D::localized(origin, grover_coin), steps);
    const WalkerState a = evolve(localized(origin, spinor, 2), coins, steps);
    const std::vector<double> pg = g.probabilities();
    CompensatedSum tv;
    for (SiteCursor c(g.box()); !c.done(); c.next()) {
        tv.add(std::abs(pg[c.index()] - a.at(c.site()).norm2()));
    }
    // Mass of the alternate walk outside the Grover box.
    double outside = 0.0;
    for (SiteCursor c(a.box()); !c.done(); c.next()) {
        if (!g.box().contains(c.site())) {
            outside += a.at(c.site()).norm2();
        }
    }
    tv.add(outside);
    return 0.5 * tv.value();
}

CoinSpinor match_aqw_spinor(const Coin4 &grover_coin, const CoinParams &coins,
                            std::int64_t fit_steps) {
    auto spinor_of = [](const std::vector<double> &x) {
        return CoinSpinor{std::cos(x[0]), std::polar(std::sin(x[0]), x[1])};
    };
    auto objective = [&](const std::vector<double> &x) {
        return grover_aqw_distance(grover_coin, spinor_of(x), coins, fit_steps);
    };
    SimplexResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (double a : {pi / 8.0, 3.0 * pi / 8.0}) {
        for (double b : {0.0, pi / 2.0, pi, 3.0 * pi / 2.0}) {
            SimplexResult r = nelder_mead(objective, {a, b}, 0.2, 1e-12, 0.0, 4000);
            if (r.value < best.value) {
                best = std::move(r);
            }
        }
    }
    return spinor_of(best.x);
}

Eigen::Matrix<cplx, 8, 8> grover3_momentum_matrix(const std::array<double, 3> &q) {
    Eigen::Matrix<cplx, 8, 8> m;
    for (int k = 0; k < 8; ++k) {
        double dot = 0.0;
        for (int a = 0; a < 3; ++a) {
            dot += q[static_cast<std::size_t>(a)] * (((k >> (2 - a)) & 1) ? -1.0 : 1.0);
        }
        const cplx phase = std::polar(1.0, -dot);
        for (int j = 0; j < 8; ++j) {
            m(k, j) = phase * ((k == j ? 1.0 : 0.0) - 0.25);
        }
    }
    return m;
}

std::array<double, 8> grover3_eigenphases(const std::array<double, 3> &q) {
    return phases_of<8>(grover3_momentum_matrix(q));
}

std::vector<MomentumMapping> grover3_mappings() {
    using R = std::array<double, 3>;
    const std::array<R, 4> rows{R{1, 1, 1}, R{1, 1, -1}, R{1, -1, 1}, R{-1, 1, 1}};
    std::vector<MomentumMapping> maps;
    maps.push_back({"identity", {R{1, 0, 0}, R{0, 1, 0}, R{0, 0, 1}}});
    const char *names[] = {"sum-drop-1", "sum-drop-2", "sum-drop-3", "sum-drop-4"};
    const char *half_names[] = {"half-sum-drop-1", "half-sum-drop-2", "half-sum-drop-3",
                                "half-sum-drop-4"};
    for (std::size_t skip = 0; skip < 4; ++skip) {
        MomentumMapping full{names[skip], {}};
        MomentumMapping half{half_names[skip], {}};
        std::size_t r = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == skip) {
                continue;
            }
            full.m[r] = rows[i];
            for (std::size_t j = 0; j < 3; ++j) {
                half.m[r][j] = 0.5 * rows[i][j];
            }
            ++r;
        }
        maps.push_back(full);
        maps.push_back(half);
    }
    return maps;
}

double grover3_deviation(const CoinParams &coins, const MomentumMapping &map,
                         int grid) {
    if (coins.n_dims() != 3) {
        throw std::invalid_argument("Grover-3 comparison requires N = 3");
    }
    const ShiftedFrame frame = shifted_frame(coins);
    const std::vector<double> axis = zone_axis(grid);
    double worst = 0.0;
    for (double u : axis) {
        for (double v : axis) {
            for (double w : axis) {
                const DispersionSample s =
                    dispersion_sample(frame.from_frame({u, v, w}), coins);
                std::array<double, 3> gq{};
                for (std::size_t r = 0; r < 3; ++r) {
                    gq[r] = map.m[r][0] * u + map.m[r][1] * v + map.m[r][2] * w;
                }
                const std::array<double, 8> g = grover3_eigenphases(gq);
                for (double om : {s.omega_plus + frame.domega, s.omega_minus + frame.domega}) {
                    double nearest = pi;
                    for (double x : g) {
                        nearest = std::min(nearest, circular_distance(om, x));
                    }
                    worst = std::max(worst, nearest);
                }
            }
        }
    }
    return worst;
}

} // namespace aqw
