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

#include "aqw/observables.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aqw {

ProbabilityField probability_field(const WalkerState &state) {
    ProbabilityField f{state.box(), std::vector<double>(state.box().volume()),
                       state.time()};
    const auto u = state.u();
    const auto d = state.d();
    for (std::size_t i = 0; i < f.p.size(); ++i) {
        f.p[i] = std::norm(u[i]) + std::norm(d[i]);
    }
    return f;
}

ProbabilityField probability_field(const GroverState2D &state) {
    return {state.box(), state.probabilities(), state.time()};
}

ProbabilityField marginal_projection(const ProbabilityField &field, std::size_t a,
                                     std::size_t b) {
    const std::size_t n = field.n_dims();
    if (a >= n || b >= n || a == b) {
        throw std::invalid_argument("marginal_projection: kept axes must be distinct "
                                    "and below " + std::to_string(n));
    }
    const Box out_box({field.box.lo(a), field.box.lo(b)}, {field.box.hi(a), field.box.hi(b)});
    std::vector<CompensatedSum> acc(out_box.volume());
    for (SiteCursor c(field.box); !c.done(); c.next()) {
        const Coord x[2] = {c.site()[a], c.site()[b]};
        acc[out_box.index(x)].add(field.p[c.index()]);
    }
    ProbabilityField out{out_box, std::vector<double>(out_box.volume()), field.t};
    for (std::size_t i = 0; i < acc.size(); ++i) {
        out.p[i] = acc[i].value();
    }
    return out;
}

MomentSummary moments(const ProbabilityField &field) {
    const std::size_t n = field.n_dims();
    std::vector<CompensatedSum> m1(n), m2(n * n);
    CompensatedSum mass;
    for (SiteCursor c(field.box); !c.done(); c.next()) {
        const double p = field.p[c.index()];
        if (p == 0.0) {
            continue;
        }
        mass.add(p);
        for (std::size_t i = 0; i < n; ++i) {
            m1[i].add(p * static_cast<double>(c.site()[i]));
        }
    }
    MomentSummary s;
    s.mean.resize(n);
    const double total = mass.value();
    for (std::size_t i = 0; i < n; ++i) {
        s.mean[i] = m1[i].value() / total;
    }
    // Central second moments, accumulated about the mean.
    for (SiteCursor c(field.box); !c.done(); c.next()) {
        const double p = field.p[c.index()];
        if (p == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double di = static_cast<double>(c.site()[i]) - s.mean[i];
            for (std::size_t j = i; j < n; ++j) {
                m2[i * n + j].add(p * di * (static_cast<double>(c.site()[j]) - s.mean[j]));
            }
        }
    }
    s.covariance.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            s.covariance[i * n + j] = s.covariance[j * n + i] = m2[i * n + j].value() / total;
        }
    }
    Eigen::MatrixXd cov(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s.cov(i, j);
        }
    }
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(cov).eigenvalues();
    const double lo = ev.minCoeff(), hi = ev.maxCoeff();
    if (hi <= 0.0) {
        s.anisotropy = 0.0;
    } else if (lo <= 0.0) {
        s.anisotropy = std::numeric_limits<double>::infinity();
    } else {
        s.anisotropy = hi / lo - 1.0;
    }
    return s;
}

std::vector<RadialBin> radial_profile(const ProbabilityField &field2d,
                                      const std::vector<double> &center,
                                      double bin_width) {
    if (field2d.n_dims() != 2 || center.size() != 2) {
        throw std::invalid_argument("radial_profile requires a 2D field and center");
    }
    if (!(bin_width > 0.0)) {
        throw std::invalid_argument("radial_profile: bin width must be > 0");
    }
    std::vector<CompensatedSum> mass, moment;
    for (SiteCursor c(field2d.box); !c.done(); c.next()) {
        const double p = field2d.p[c.index()];
        const double dx = static_cast<double>(c.site()[0]) - center[0];
        const double dy = static_cast<double>(c.site()[1]) - center[1];
        const double r = std::hypot(dx, dy);
        const auto k = static_cast<std::size_t>(std::floor(r / bin_width));
        if (k >= mass.size()) {
            mass.resize(k + 1);
            moment.resize(k + 1);
        }
        mass[k].add(p);
        moment[k].add(p * r);
    }
    std::vector<RadialBin> out(mass.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].mass = mass[k].value();
        out[k].radius = out[k].mass > 0.0 ? moment[k].value() / out[k].mass
                                          : static_cast<double>(k) * bin_width;
    }
    return out;
}

double peak_radius(const std::vector<RadialBin> &profile) {
    if (profile.empty()) {
        throw std::invalid_argument("peak_radius: empty profile");
    }
    std::size_t top = 0;
    for (std::size_t k = 1; k < profile.size(); ++k) {
        if (profile[k].mass > profile[top].mass) {
            top = k;
        }
    }
    double m = 0.0, mr = 0.0;
    for (std::size_t k = top == 0 ? 0 : top - 1; k <= std::min(top + 1, profile.size() - 1); ++k) {
        m += profile[k].mass;
        mr += profile[k].mass * profile[k].radius;
    }
    return m > 0.0 ? mr / m : profile[top].radius;
}

std::vector<double> asymmetry_metrics(const ProbabilityField &field,
                                      const std::vector<double> &center) {
    const std::size_t n = field.n_dims();
    std::vector<double> c = center.empty() ? std::vector<double>(n, 0.0) : center;
    if (c.size() != n) {
        throw std::invalid_argument("asymmetry_metrics: center dimension mismatch");
    }
    std::vector<double> scores(n);
    Site mirror(n);
    for (std::size_t axis = 0; axis < n; ++axis) {
        const double twice = 2.0 * c[axis];
        if (twice != std::round(twice)) {
            throw std::invalid_argument("asymmetry_metrics: reflection center must be "
                                        "a lattice site or half-site");
        }
        CompensatedSum acc;
        // Sites of the box, plus mirror images that fall outside it.
        for (SiteCursor s(field.box); !s.done(); s.next()) {
            mirror = s.site();
            mirror[axis] = static_cast<Coord>(twice) - mirror[axis];
            acc.add(std::abs(field.p[s.index()] - field.at(mirror)));
            if (!field.box.contains(mirror)) {
                acc.add(field.p[s.index()]);
            }
        }
        scores[axis] = 0.5 * acc.value();
    }
    return scores;
}

} // namespace aqw
