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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqw {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Raised when a run configuration is rejected; the message names the field.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Internal-consistency failure of a numerical routine (e.g. an arccos
/// argument far outside [-1, 1]).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Group velocity requested at (or too close to) a band degeneracy.
class DegeneratePointError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Maps an angle onto (-pi, pi].
inline double wrap_angle(double a) {
    double r = std::remainder(a, two_pi);
    if (r <= -pi) {
        r += two_pi;
    }
    return r;
}

/// Shortest distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
    return std::abs(wrap_angle(a - b));
}

/// Row-major 2x2 complex matrix, basis order (u, d).
struct Mat2 {
    std::array<cplx, 4> m{};

    cplx &operator()(std::size_t r, std::size_t c) { return m[2 * r + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return m[2 * r + c];
    }

    static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
};

inline Mat2 operator*(const Mat2 &a, const Mat2 &b) {
    Mat2 r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
        }
    }
    return r;
}

/// Coin-qubit amplitudes.
struct CoinSpinor {
    cplx u{1.0, 0.0};
    cplx d{0.0, 0.0};

    double norm2() const { return std::norm(u) + std::norm(d); }

    bool operator==(const CoinSpinor &) const = default;
};

/// (alpha, beta, theta) of a single axis coin, stored canonically in (-pi, pi].
struct AxisCoin {
    double alpha = 0.0;
    double beta = 0.0;
    double theta = 0.0;

    AxisCoin() = default;
    AxisCoin(double a, double b, double t);
};

/// Per-axis coin parameters of an N-dimensional alternate walk.
class CoinParams {
  public:
    CoinParams() = default;
    explicit CoinParams(std::vector<AxisCoin> axes);

    /// All axes equal to the given theta with zero phases.
    static CoinParams uniform(std::size_t n_dims, double theta);
    static CoinParams hadamard(std::size_t n_dims) {
        return uniform(n_dims, pi / 4.0);
    }
    static CoinParams from_thetas(const std::vector<double> &thetas);

    std::size_t n_dims() const { return axes_.size(); }
    const AxisCoin &operator[](std::size_t i) const { return axes_.at(i); }
    const std::vector<AxisCoin> &axes() const { return axes_; }

    /// Sum of all alpha_i + beta_i.
    double phase_sum() const;

    bool operator==(const CoinParams &) const = default;

  private:
    std::vector<AxisCoin> axes_;
};

inline bool operator==(const AxisCoin &a, const AxisCoin &b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.theta == b.theta;
}

} // namespace aqw
