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
#include <span>
#include <string_view>

#include "aqw/types.hpp"

/**
 * @file
 * Data-parallel inner loops of the walk. Every kernel has a scalar reference
 * implementation and, where the CPU supports it, a vectorised variant. The
 * variants perform the same floating-point operations in the same order (no
 * FMA contraction), so their results are bit-identical to the scalar path.
 */

namespace aqw::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Table of kernel entry points for one instruction set.
struct KernelSet {
    Isa isa;

    /// (u, d) <- m * (u, d) elementwise over two structure-of-arrays fields.
    void (*coin)(std::span<cplx> u, std::span<cplx> d, const Mat2 &m);

    /// p[i] = |u[i]|^2 + |d[i]|^2.
    void (*probability)(std::span<const cplx> u, std::span<const cplx> d,
                        std::span<double> p);

    /// a_k <- a_k - (a_0 + a_1 + a_2 + a_3) / 2 on four component arrays
    /// (sign-flipped 4-dim Grover reflection).
    void (*grover4)(std::array<std::span<cplx>, 4> a);
};

/// True when the running CPU can execute `isa`.
bool supported(Isa isa);

/// Kernel table for a specific ISA; throws if unsupported on this CPU.
const KernelSet &kernels(Isa isa);

/// The table used by default: the widest supported ISA, unless the
/// environment variable AQW_SIMD is set to "scalar" or "avx2".
const KernelSet &active();

namespace detail {
extern const KernelSet scalar_set;
#if defined(AQW_HAVE_AVX2_KERNELS)
extern const KernelSet avx2_set;
#endif
} // namespace detail

} // namespace aqw::simd
