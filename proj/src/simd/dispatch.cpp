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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "aqw/simd/kernels.hpp"

namespace aqw::simd {

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool supported(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(AQW_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

const KernelSet &kernels(Isa isa) {
    if (!supported(isa)) {
        throw std::runtime_error("SIMD kernels '" + std::string(isa_name(isa)) +
                                 "' not supported on this CPU");
    }
#if defined(AQW_HAVE_AVX2_KERNELS)
    if (isa == Isa::avx2) {
        return detail::avx2_set;
    }
#endif
    return detail::scalar_set;
}

namespace {

const KernelSet &select() {
    if (const char *env = std::getenv("AQW_SIMD")) {
        const std::string want(env);
        if (want == "scalar") {
            return kernels(Isa::scalar);
        }
        if (want == "avx2" && supported(Isa::avx2)) {
            return kernels(Isa::avx2);
        }
    }
    if (supported(Isa::avx2)) {
        return kernels(Isa::avx2);
    }
    return kernels(Isa::scalar);
}

} // namespace

const KernelSet &active() {
    static const KernelSet &chosen = select();
    return chosen;
}

} // namespace aqw::simd
