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

#include "aqw/simd/kernels.hpp"

namespace aqw::simd {
namespace {

// Explicit real arithmetic instead of std::complex operator* so the operation
// order is pinned and matches the vector variants exactly.
inline void cmul_acc(double ar, double ai, double mr, double mi, double &re,
                     double &im) {
    re = ar * mr - ai * mi;
    im = ai * mr + ar * mi;
}

void coin_scalar(std::span<cplx> u, std::span<cplx> d, const Mat2 &m) {
    const double m00r = m(0, 0).real(), m00i = m(0, 0).imag();
    const double m01r = m(0, 1).real(), m01i = m(0, 1).imag();
    const double m10r = m(1, 0).real(), m10i = m(1, 0).imag();
    const double m11r = m(1, 1).real(), m11i = m(1, 1).imag();
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double ur = u[i].real(), ui = u[i].imag();
        const double dr = d[i].real(), di = d[i].imag();
        double ar, ai, br, bi;
        cmul_acc(ur, ui, m00r, m00i, ar, ai);
        cmul_acc(dr, di, m01r, m01i, br, bi);
        const cplx nu{ar + br, ai + bi};
        cmul_acc(ur, ui, m10r, m10i, ar, ai);
        cmul_acc(dr, di, m11r, m11i, br, bi);
        d[i] = cplx{ar + br, ai + bi};
        u[i] = nu;
    }
}

void probability_scalar(std::span<const cplx> u, std::span<const cplx> d,
                        std::span<double> p) {
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double ur = u[i].real(), ui = u[i].imag();
        const double dr = d[i].real(), di = d[i].imag();
        p[i] = (ur * ur + ui * ui) + (dr * dr + di * di);
    }
}

void grover4_scalar(std::array<std::span<cplx>, 4> a) {
    const std::size_t n = a[0].size();
    for (std::size_t i = 0; i < n; ++i) {
        const double sr =
            ((a[0][i].real() + a[1][i].real()) + a[2][i].real()) + a[3][i].real();
        const double si =
            ((a[0][i].imag() + a[1][i].imag()) + a[2][i].imag()) + a[3][i].imag();
        const double hr = sr * 0.5, hi = si * 0.5;
        for (std::size_t k = 0; k < 4; ++k) {
            a[k][i] = cplx{a[k][i].real() - hr, a[k][i].imag() - hi};
        }
    }
}

} // namespace

namespace detail {
const KernelSet scalar_set{Isa::scalar, &coin_scalar, &probability_scalar,
                           &grover4_scalar};
} // namespace detail

} // namespace aqw::simd
