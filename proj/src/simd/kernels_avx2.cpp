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

#include <immintrin.h>

// Compiled with -mavx2 only; FMA is deliberately not enabled so that every
// product and sum rounds exactly as in the scalar reference.

namespace aqw::simd {
namespace {

// Two packed complex<double>: [r0, i0, r1, i1].
inline __m256d cmul(__m256d z, __m256d mr, __m256d mi) {
    const __m256d a = _mm256_mul_pd(z, mr);
    const __m256d swapped = _mm256_permute_pd(z, 0b0101);
    const __m256d b = _mm256_mul_pd(swapped, mi);
    return _mm256_addsub_pd(a, b);
}

void coin_avx2(std::span<cplx> u, std::span<cplx> d, const Mat2 &m) {
    const __m256d m00r = _mm256_set1_pd(m(0, 0).real());
    const __m256d m00i = _mm256_set1_pd(m(0, 0).imag());
    const __m256d m01r = _mm256_set1_pd(m(0, 1).real());
    const __m256d m01i = _mm256_set1_pd(m(0, 1).imag());
    const __m256d m10r = _mm256_set1_pd(m(1, 0).real());
    const __m256d m10i = _mm256_set1_pd(m(1, 0).imag());
    const __m256d m11r = _mm256_set1_pd(m(1, 1).real());
    const __m256d m11i = _mm256_set1_pd(m(1, 1).imag());

    const std::size_t n = u.size();
    auto *pu = reinterpret_cast<double *>(u.data());
    auto *pd = reinterpret_cast<double *>(d.data());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vu = _mm256_loadu_pd(pu + 2 * i);
        const __m256d vd = _mm256_loadu_pd(pd + 2 * i);
        const __m256d nu =
            _mm256_add_pd(cmul(vu, m00r, m00i), cmul(vd, m01r, m01i));
        const __m256d nd =
            _mm256_add_pd(cmul(vu, m10r, m10i), cmul(vd, m11r, m11i));
        _mm256_storeu_pd(pu + 2 * i, nu);
        _mm256_storeu_pd(pd + 2 * i, nd);
    }
    if (i < n) {
        detail::scalar_set.coin(u.subspan(i), d.subspan(i), m);
    }
}

void probability_avx2(std::span<const cplx> u, std::span<const cplx> d,
                      std::span<double> p) {
    const std::size_t n = u.size();
    const auto *pu = reinterpret_cast<const double *>(u.data());
    const auto *pd = reinterpret_cast<const double *>(d.data());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vu = _mm256_loadu_pd(pu + 2 * i);
        const __m256d vd = _mm256_loadu_pd(pd + 2 * i);
        // [|u0|^2, |d0|^2, |u1|^2, |d1|^2]
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(vu, vu),
                                         _mm256_mul_pd(vd, vd));
        const __m256d s = _mm256_hadd_pd(h, h);
        const __m256d packed = _mm256_permute4x64_pd(s, 0b1000);
        _mm_storeu_pd(p.data() + i, _mm256_castpd256_pd128(packed));
    }
    if (i < n) {
        detail::scalar_set.probability(u.subspan(i), d.subspan(i),
                                       p.subspan(i));
    }
}

void grover4_avx2(std::array<std::span<cplx>, 4> a) {
    const std::size_t n = a[0].size();
    std::array<double *, 4> p{};
    for (std::size_t k = 0; k < 4; ++k) {
        p[k] = reinterpret_cast<double *>(a[k].data());
    }
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v0 = _mm256_loadu_pd(p[0] + 2 * i);
        const __m256d v1 = _mm256_loadu_pd(p[1] + 2 * i);
        const __m256d v2 = _mm256_loadu_pd(p[2] + 2 * i);
        const __m256d v3 = _mm256_loadu_pd(p[3] + 2 * i);
        const __m256d s =
            _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(v0, v1), v2), v3);
        const __m256d h = _mm256_mul_pd(s, half);
        _mm256_storeu_pd(p[0] + 2 * i, _mm256_sub_pd(v0, h));
        _mm256_storeu_pd(p[1] + 2 * i, _mm256_sub_pd(v1, h));
        _mm256_storeu_pd(p[2] + 2 * i, _mm256_sub_pd(v2, h));
        _mm256_storeu_pd(p[3] + 2 * i, _mm256_sub_pd(v3, h));
    }
    if (i < n) {
        detail::scalar_set.grover4({a[0].subspan(i), a[1].subspan(i),
                                    a[2].subspan(i), a[3].subspan(i)});
    }
}

} // namespace

namespace detail {
const KernelSet avx2_set{Isa::avx2, &coin_avx2, &probability_avx2,
                         &grover4_avx2};
} // namespace detail

} // namespace aqw::simd
