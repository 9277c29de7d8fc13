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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace aqw {

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
};

/// Downhill simplex minimisation of `f` from `x0` with initial edge `step`.
/// Stops when the simplex diameter drops below `xtol`, the best value below
/// `ftarget`, or after `max_iter` iterations.
template <class F>
SimplexResult nelder_mead(F &&f, std::vector<double> x0, double step,
                          double xtol, double ftarget = -1.0,
                          std::size_t max_iter = 10000) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> val(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i + 1][i] += step;
    }
    for (std::size_t i = 0; i <= n; ++i) {
        val[i] = f(pts[i]);
    }
    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    auto along = [&](const std::vector<double> &from, double t,
                     std::vector<double> &out) {
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = centroid[j] + t * (from[j] - centroid[j]);
        }
    };

    std::size_t it = 0;
    for (; it < max_iter; ++it) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
        const std::size_t best = order.front(), worst = order.back(),
                          second = order[n - 1];
        if (val[best] <= ftarget) {
            break;
        }
        double diam = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                diam = std::max(diam, std::abs(pts[i][j] - pts[best][j]));
            }
        }
        if (diam < xtol) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += pts[i][j] / static_cast<double>(n);
            }
        }
        along(pts[worst], -1.0, trial);
        const double fr = f(trial);
        if (fr < val[best]) {
            along(pts[worst], -2.0, trial2);
            const double fe = f(trial2);
            if (fe < fr) {
                pts[worst] = trial2;
                val[worst] = fe;
            } else {
                pts[worst] = trial;
                val[worst] = fr;
            }
            continue;
        }
        if (fr < val[second]) {
            pts[worst] = trial;
            val[worst] = fr;
            continue;
        }
        const bool outside = fr < val[worst];
        along(pts[worst], outside ? -0.5 : 0.5, trial2);
        const double fc = f(trial2);
        if (fc < (outside ? fr : val[worst])) {
            pts[worst] = trial2;
            val[worst] = fc;
            continue;
        }
        // shrink towards the best vertex
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
            }
            val[i] = f(pts[i]);
        }
    }
    const auto best = static_cast<std::size_t>(
        std::min_element(val.begin(), val.end()) - val.begin());
    return {pts[best], val[best], it};
}

} // namespace aqw
