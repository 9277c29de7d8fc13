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

#include "aqw/diabolical.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aqw/nelder_mead.hpp"

namespace aqw {
namespace {

double gap_at(const std::vector<double> &q, const CoinParams &coins) {
    return dispersion_sample(Pseudomomentum(q), coins).gap;
}

bool same_point(const Pseudomomentum &a, const Pseudomomentum &b, double r) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (circular_distance(a[i], b[i]) >= r) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<double> cone_slopes(const Pseudomomentum &q, const CoinParams &coins,
                                double eps) {
    const std::size_t n = q.size();
    const std::size_t n_par = n * (n + 1) / 2;
    std::vector<std::vector<double>> dirs;
    std::vector<int> digit(n, -1);
    while (true) {
        if (std::any_of(digit.begin(), digit.end(), [](int v) { return v != 0; })) {
            dirs.emplace_back(digit.begin(), digit.end());
        }
        std::size_t a = 0;
        while (a < n && digit[a] == 1) {
            digit[a++] = -1;
        }
        if (a == n) {
            break;
        }
        ++digit[a];
    }

    Eigen::MatrixXd design(dirs.size(), n_par);
    Eigen::VectorXd rhs(dirs.size());
    for (std::size_t r = 0; r < dirs.size(); ++r) {
        std::vector<double> dq = dirs[r];
        double len = 0.0;
        for (double v : dq) {
            len += v * v;
        }
        len = std::sqrt(len);
        std::vector<double> x = q.values();
        for (std::size_t i = 0; i < n; ++i) {
            dq[i] *= eps / len;
            x[i] += dq[i];
        }
        const double half = 0.5 * gap_at(x, coins);
        rhs(static_cast<Eigen::Index>(r)) = half * half;
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                design(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c++)) =
                    (i == j ? 1.0 : 2.0) * dq[i] * dq[j];
            }
        }
    }
    const Eigen::VectorXd b = design.colPivHouseholderQr().solve(rhs);
    Eigen::MatrixXd form(n, n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            form(i, j) = form(j, i) = b(static_cast<Eigen::Index>(c++));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form);
    std::vector<double> slopes(n);
    for (std::size_t i = 0; i < n; ++i) {
        slopes[i] = std::sqrt(std::max(0.0, es.eigenvalues()(static_cast<Eigen::Index>(i))));
    }
    return slopes;
}

std::vector<std::vector<double>> sphere_directions(std::size_t n_dims) {
    std::vector<std::vector<double>> dirs;
    if (n_dims == 1) {
        return {{1.0}, {-1.0}};
    }
    if (n_dims == 2) {
        for (int k = 0; k < 64; ++k) {
            const double a = two_pi * k / 64.0;
            dirs.push_back({std::cos(a), std::sin(a)});
        }
        return dirs;
    }
    if (n_dims == 3) {
        const int m = 200;
        const double golden = pi * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < m; ++k) {
            const double z = 1.0 - (2.0 * k + 1.0) / m;
            const double rho = std::sqrt(1.0 - z * z);
            dirs.push_back({rho * std::cos(golden * k), rho * std::sin(golden * k), z});
        }
        return dirs;
    }
    throw std::invalid_argument("sphere_directions: N must be 1, 2 or 3");
}

double cone_max_speed(const Pseudomomentum &q, const CoinParams &coins,
                      double radius) {
    double best = 0.0;
    for (const auto &dir : sphere_directions(q.size())) {
        std::vector<double> x = q.values();
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] += radius * dir[i];
        }
        for (Branch b : {Branch::plus, Branch::minus}) {
            double s2 = 0.0;
            for (double g : group_velocity(Pseudomomentum(x), b, coins)) {
                s2 += g * g;
            }
            best = std::max(best, std::sqrt(s2));
        }
    }
    return best;
}

std::vector<DiabolicalPoint> find_diabolical_points(const CoinParams &coins,
                                                    const DiabolicalSearch &opts) {
    const std::size_t n = coins.n_dims();
    if (n != 2 && n != 3) {
        throw std::invalid_argument("diabolical-point search requires N = 2 or 3");
    }
    if (opts.grid < 16) {
        throw std::invalid_argument("diabolical-point search requires grid >= 16");
    }
    const auto g = static_cast<std::size_t>(opts.grid);
    const std::vector<double> axis = zone_axis(opts.grid);

    std::size_t total = 1;
    for (std::size_t a = 0; a < n; ++a) {
        total *= g;
    }
    std::vector<double> gaps(total);
    std::vector<std::size_t> idx(n);
    std::vector<double> q(n);
    auto decode = [&](std::size_t flat) {
        for (std::size_t a = n; a-- > 0;) {
            idx[a] = flat % g;
            flat /= g;
            q[a] = axis[idx[a]];
        }
    };
    for (std::size_t f = 0; f < total; ++f) {
        decode(f);
        gaps[f] = gap_at(q, coins);
    }

    std::vector<DiabolicalPoint> found;
    const double step = two_pi / opts.grid;
    for (std::size_t f = 0; f < total; ++f) {
        // Group speeds are bounded by sqrt(N), so a degeneracy inside the
        // neighbouring cells keeps the sampled gap below N * step.
        if (gaps[f] > 2.0 * static_cast<double>(n) * step) {
            continue;
        }
        decode(f);
        bool is_min = true;
        std::vector<int> off(n, -1);
        while (is_min) {
            if (std::any_of(off.begin(), off.end(), [](int v) { return v != 0; })) {
                std::size_t nb = 0;
                for (std::size_t a = 0; a < n; ++a) {
                    nb = nb * g + (idx[a] + g + static_cast<std::size_t>(off[a] + 1) - 1) % g;
                }
                if (gaps[nb] < gaps[f]) {
                    is_min = false;
                }
            }
            std::size_t a = 0;
            while (a < n && off[a] == 1) {
                off[a++] = -1;
            }
            if (a == n) {
                break;
            }
            ++off[a];
        }
        if (!is_min) {
            continue;
        }

        const SimplexResult res = nelder_mead(
            [&](const std::vector<double> &x) { return gap_at(x, coins); }, q,
            0.5 * step, 1e-14, 0.0, 20000);
        const Pseudomomentum qp(res.x);
        const DispersionSample s = dispersion_sample(qp, coins);
        if (!(s.gap < opts.tol)) {
            continue;
        }
        const double omega =
            wrap_angle(s.omega_plus + 0.5 * wrap_angle(s.omega_minus - s.omega_plus));
        if (opts.omega && circular_distance(omega, *opts.omega) > 1e-6) {
            continue;
        }
        const bool dup = std::any_of(found.begin(), found.end(), [&](const auto &p) {
            return same_point(p.q, qp, opts.dedup_radius);
        });
        if (!dup) {
            found.push_back({qp, s.gap, omega, {}});
        }
    }
    for (auto &p : found) {
        p.slopes = cone_slopes(p.q, coins);
    }
    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
        return a.q.values() < b.q.values();
    });
    return found;
}

} // namespace aqw
