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

#include "aqw/dispersion.hpp"

#if AQW_HAVE_QUADMATH
#include <quadmath.h>
#endif

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aqw/walk.hpp"

namespace aqw {

Pseudomomentum::Pseudomomentum(std::vector<double> q) : q_(std::move(q)) {
    for (double &x : q_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("pseudo-momentum must be finite");
        }
        x = wrap_angle(x);
    }
}

std::vector<double> ShiftedFrame::to_frame(const std::vector<double> &q) const {
    std::vector<double> f(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        f[i] = q[i] + dq.at(i);
    }
    return f;
}

Pseudomomentum ShiftedFrame::from_frame(const std::vector<double> &frame) const {
    std::vector<double> q(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        q[i] = frame[i] - dq.at(i);
    }
    return Pseudomomentum(std::move(q));
}

ShiftedFrame shifted_frame(const CoinParams &coins) {
    const std::size_t n = coins.n_dims();
    ShiftedFrame f;
    f.dq.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        f.dq[i] = 0.5 * (coins[i].beta + coins[(i + 1) % n].alpha);
    }
    f.domega = 0.5 * coins.phase_sum();
    return f;
}

namespace {

void check_q(const Pseudomomentum &q, const CoinParams &coins) {
    if (q.size() != coins.n_dims()) {
        throw std::invalid_argument("pseudo-momentum has " +
                                    std::to_string(q.size()) +
                                    " components, coins have " +
                                    std::to_string(coins.n_dims()));
    }
}

CoinSpinor normalized(cplx a, cplx b) {
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

// Eigenvector of [[x, y], [z, -x]] for eigenvalue mu, or nullopt-like (0,0)
// when the matrix is (numerically) a multiple of identity.
CoinSpinor traceless_eigvec(cplx x, cplx y, cplx z, cplx mu, bool upper) {
    const cplx a1 = y, b1 = mu - x;
    const cplx a2 = mu + x, b2 = z;
    const double n1 = std::norm(a1) + std::norm(b1);
    const double n2 = std::norm(a2) + std::norm(b2);
    if (std::max(n1, n2) < 1e-28) {
        return upper ? CoinSpinor{1.0, 0.0} : CoinSpinor{0.0, 1.0};
    }
    return n1 >= n2 ? normalized(a1, b1) : normalized(a2, b2);
}

} // namespace

Mat2 momentum_step_matrix(const Pseudomomentum &q, const CoinParams &coins) {
    check_q(q, coins);
    Mat2 u = Mat2::identity();
    for (std::size_t i = 0; i < coins.n_dims(); ++i) {
        Mat2 c = coin_matrix(coins[i]);
        const cplx down = std::polar(1.0, -q[i]);
        const cplx up = std::polar(1.0, q[i]);
        c(0, 0) *= down;
        c(0, 1) *= down;
        c(1, 0) *= up;
        c(1, 1) *= up;
        u = c * u;
    }
    return u;
}

DispersionSample dispersion_sample(const Pseudomomentum &q,
                                   const CoinParams &coins) {
    const Mat2 u = momentum_step_matrix(q, coins);
    const ShiftedFrame frame = shifted_frame(coins);
    // V = U e^{-i domega} has eigenvalues e^{-i Omega}.
    const cplx ph = std::polar(1.0, -frame.domega);
    const cplx v00 = u(0, 0) * ph, v01 = u(0, 1) * ph;
    const cplx v10 = u(1, 0) * ph, v11 = u(1, 1) * ph;
    const cplx half_tr = 0.5 * (v00 + v11);
    const cplx x = 0.5 * (v00 - v11);
    // |sin((Omega1 - Omega2) / 2)|, free of cancellation at a degeneracy.
    const double r = std::sqrt(std::abs(x * x + v01 * v10));

    double big_plus, gap;
    if (coins.n_dims() % 2 == 0) {
        const double c = half_tr.real();
        big_plus = std::atan2(r, c);
        gap = 2.0 * std::atan2(r, std::abs(c));
    } else {
        const double s = -half_tr.imag();
        big_plus = std::atan2(s, r);
        gap = 2.0 * std::atan2(r, std::abs(s));
    }
    const double big_minus =
        coins.n_dims() % 2 == 0 ? -big_plus : pi - big_plus;

    DispersionSample out;
    out.q = q;
    out.omega_plus = wrap_angle(big_plus - frame.domega);
    out.omega_minus = wrap_angle(big_minus - frame.domega);
    out.gap = gap;
    const cplx mu_plus = std::polar(1.0, -big_plus) - half_tr;
    const cplx mu_minus = std::polar(1.0, -big_minus) - half_tr;
    out.eigvec_plus = traceless_eigvec(x, v01, v10, mu_plus, true);
    out.eigvec_minus = traceless_eigvec(x, v01, v10, mu_minus, false);
    return out;
}

double branch_omega(const DispersionSample &s, Branch b) {
    return b == Branch::plus ? s.omega_plus : s.omega_minus;
}

double clamp_unit(double x) {
    if (!std::isfinite(x) || std::abs(x) > 1.0 + 1e-12) {
        throw NumericalError("trigonometric argument " + std::to_string(x) +
                             " outside [-1, 1]");
    }
    return std::clamp(x, -1.0, 1.0);
}

namespace {

// asin and acos lose half the significand near +-1, which is exactly where
// the bands touch; the closed forms are therefore evaluated in extended
// precision and rounded once at the end.
#if AQW_HAVE_QUADMATH
using wide = __float128;
wide wsin(wide x) { return sinq(x); }
wide wcos(wide x) { return cosq(x); }
wide wasin(wide x) { return asinq(x); }
wide wacos(wide x) { return acosq(x); }
#else
using wide = long double;
wide wsin(wide x) { return std::sin(x); }
wide wcos(wide x) { return std::cos(x); }
wide wasin(wide x) { return std::asin(x); }
wide wacos(wide x) { return std::acos(x); }
#endif

wide clamp_wide(wide x) {
    clamp_unit(static_cast<double>(x));
    return x > 1 ? wide(1) : (x < -1 ? wide(-1) : x);
}

// Odd N: Omega+ = asin(s), Omega- = pi - asin(s).
std::pair<double, double> odd_branches(wide sin_big, double domega) {
    const wide big = wasin(clamp_wide(sin_big));
    const wide wpi = wacos(wide(-1));
    return {wrap_angle(static_cast<double>(big) - domega),
            wrap_angle(static_cast<double>(wpi - big) - domega)};
}

} // namespace

std::pair<double, double> closed_form_omega1(const Pseudomomentum &q,
                                             const CoinParams &coins) {
    check_q(q, coins);
    if (coins.n_dims() != 1) {
        throw std::invalid_argument("closed_form_omega1 requires N = 1");
    }
    const ShiftedFrame f = shifted_frame(coins);
    const wide u = wide(q[0]) + wide(f.dq[0]);
    return odd_branches(wcos(coins[0].theta) * wsin(u), f.domega);
}

std::pair<double, double> closed_form_omega2(const Pseudomomentum &q,
                                             const CoinParams &coins) {
    check_q(q, coins);
    if (coins.n_dims() != 2) {
        throw std::invalid_argument("closed_form_omega2 requires N = 2");
    }
    const ShiftedFrame f = shifted_frame(coins);
    const wide u = wide(q[0]) + wide(f.dq[0]);
    const wide v = wide(q[1]) + wide(f.dq[1]);
    const wide c1 = wcos(coins[0].theta), s1 = wsin(coins[0].theta);
    const wide c2 = wcos(coins[1].theta), s2 = wsin(coins[1].theta);
    const wide cos_big = c1 * c2 * wcos(u + v) + s1 * s2 * wcos(u - v);
    const double big = static_cast<double>(wacos(clamp_wide(cos_big)));
    return {wrap_angle(big - f.domega), wrap_angle(-big - f.domega)};
}

std::pair<double, double> closed_form_omega3(const Pseudomomentum &q,
                                             const CoinParams &coins) {
    check_q(q, coins);
    if (coins.n_dims() != 3) {
        throw std::invalid_argument("closed_form_omega3 requires N = 3");
    }
    const ShiftedFrame f = shifted_frame(coins);
    const wide u = wide(q[0]) + wide(f.dq[0]);
    const wide v = wide(q[1]) + wide(f.dq[1]);
    const wide w = wide(q[2]) + wide(f.dq[2]);
    const wide c1 = wcos(coins[0].theta), s1 = wsin(coins[0].theta);
    const wide c2 = wcos(coins[1].theta), s2 = wsin(coins[1].theta);
    const wide c3 = wcos(coins[2].theta), s3 = wsin(coins[2].theta);
    const wide sin_big = c1 * (c2 * c3 * wsin(u + v + w) + s2 * s3 * wsin(u - v + w)) +
                         s1 * (c2 * s3 * wsin(u + v - w) - s2 * c3 * wsin(u - v - w));
    return odd_branches(sin_big, f.domega);
}

std::pair<double, double> closed_form_omega(const Pseudomomentum &q,
                                            const CoinParams &coins) {
    switch (coins.n_dims()) {
    case 1:
        return closed_form_omega1(q, coins);
    case 2:
        return closed_form_omega2(q, coins);
    case 3:
        return closed_form_omega3(q, coins);
    default:
        throw std::invalid_argument("closed-form dispersion available for N <= 3");
    }
}

std::vector<double> group_velocity(const Pseudomomentum &q, Branch branch,
                                   const CoinParams &coins, double h) {
    const DispersionSample at = dispersion_sample(q, coins);
    if (at.gap <= 1e-6) {
        throw DegeneratePointError("group velocity undefined: band gap " +
                                   std::to_string(at.gap) + " at a degeneracy");
    }
    std::vector<double> grad(q.size());
    std::vector<double> qp = q.values();
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double q0 = qp[i];
        qp[i] = q0 + h;
        const double wp =
            branch_omega(dispersion_sample(Pseudomomentum(qp), coins), branch);
        qp[i] = q0 - h;
        const double wm =
            branch_omega(dispersion_sample(Pseudomomentum(qp), coins), branch);
        qp[i] = q0;
        grad[i] = wrap_angle(wp - wm) / (2.0 * h);
    }
    return grad;
}

std::vector<double> zone_axis(int grid) {
    if (grid < 1) {
        throw std::invalid_argument("grid resolution must be >= 1");
    }
    std::vector<double> ax(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) {
        ax[static_cast<std::size_t>(k)] = -pi + (k + 1) * two_pi / grid;
    }
    return ax;
}

std::vector<double> zone_axis_offset(int grid) {
    std::vector<double> ax = zone_axis(grid);
    for (double &x : ax) {
        x -= pi / grid;
    }
    return ax;
}

namespace {

// Calls f(q) for every point of axis^N in lexicographic order.
template <class F>
void for_each_mesh_point(const std::vector<double> &axis, std::size_t n, F &&f) {
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> q(n, axis.front());
    while (true) {
        f(q);
        std::size_t a = n;
        while (a-- > 0) {
            if (++idx[a] < axis.size()) {
                q[a] = axis[idx[a]];
                break;
            }
            idx[a] = 0;
            q[a] = axis[0];
        }
        if (a == static_cast<std::size_t>(-1)) {
            return;
        }
    }
}

} // namespace

double max_group_speed(const CoinParams &coins, int grid) {
    double best = 0.0;
    for_each_mesh_point(zone_axis_offset(grid), coins.n_dims(),
                        [&](const std::vector<double> &q) {
                            const Pseudomomentum p(q);
                            if (dispersion_sample(p, coins).gap <= 1e-4) {
                                return;
                            }
                            for (Branch b : {Branch::plus, Branch::minus}) {
                                double s2 = 0.0;
                                for (double g : group_velocity(p, b, coins)) {
                                    s2 += g * g;
                                }
                                best = std::max(best, std::sqrt(s2));
                            }
                        });
    return best;
}

std::vector<DispersionSample> dispersion_grid(const CoinParams &coins, int grid) {
    std::vector<DispersionSample> out;
    for_each_mesh_point(zone_axis(grid), coins.n_dims(),
                        [&](const std::vector<double> &q) {
                            out.push_back(dispersion_sample(Pseudomomentum(q), coins));
                        });
    return out;
}

} // namespace aqw
