// Copyright 2026 The kraus-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels.h"
#include "kraus_forge/error.h"
#include "kraus_forge/simd.h"

namespace kraus_forge::simd {

namespace {

bool supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

void require(Isa isa) {
    if (!supported(isa)) {
        throw Error(ErrorCode::InvalidParameter,
                    "ISA " + std::string(isa_name(isa)) + " is not available on this CPU");
    }
}

void check_lengths(std::size_t n, std::initializer_list<std::size_t> others) {
    for (std::size_t m : others) {
        if (m != n) {
            throw Error(ErrorCode::InvalidParameter, "point cloud component lengths differ");
        }
    }
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (supported(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

Isa active_isa() {
    const auto isas = available_isas();
    if (const char *env = std::getenv("KRAUS_FORGE_ISA")) {
        const std::string_view wanted(env);
        for (Isa isa : isas) {
            if (isa_name(isa) == wanted) {
                return isa;
            }
        }
    }
    return isas.back();
}

void affine3(Isa isa, const Mat3 &m, const Vec3 &b, std::span<const double> x,
             std::span<const double> y, std::span<const double> z, std::span<double> out_x,
             std::span<double> out_y, std::span<double> out_z) {
    const std::size_t n = x.size();
    check_lengths(n, {y.size(), z.size(), out_x.size(), out_y.size(), out_z.size()});
    require(isa);
    const double *mm = m.data.data();
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::Avx2:
            kernels::affine3_avx2(mm, b.data(), x.data(), y.data(), z.data(), out_x.data(),
                                  out_y.data(), out_z.data(), n);
            return;
#endif
#if defined(__aarch64__)
        case Isa::Neon:
            kernels::affine3_neon(mm, b.data(), x.data(), y.data(), z.data(), out_x.data(),
                                  out_y.data(), out_z.data(), n);
            return;
#endif
        default:
            kernels::affine3_scalar(mm, b.data(), x.data(), y.data(), z.data(), out_x.data(),
                                    out_y.data(), out_z.data(), n);
    }
}

void affine3(const Mat3 &m, const Vec3 &b, std::span<const double> x, std::span<const double> y,
             std::span<const double> z, std::span<double> out_x, std::span<double> out_y,
             std::span<double> out_z) {
    affine3(active_isa(), m, b, x, y, z, out_x, out_y, out_z);
}

double max_distance_sq(Isa isa, std::span<const double> x, std::span<const double> y,
                       std::span<const double> z, const Vec3 &c) {
    const std::size_t n = x.size();
    check_lengths(n, {y.size(), z.size()});
    require(isa);
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::Avx2:
            return kernels::max_distance_sq_avx2(x.data(), y.data(), z.data(), n, c[0], c[1], c[2]);
#endif
#if defined(__aarch64__)
        case Isa::Neon:
            return kernels::max_distance_sq_neon(x.data(), y.data(), z.data(), n, c[0], c[1], c[2]);
#endif
        default:
            return kernels::max_distance_sq_scalar(x.data(), y.data(), z.data(), n, c[0], c[1],
                                                   c[2]);
    }
}

double max_distance_sq(std::span<const double> x, std::span<const double> y,
                       std::span<const double> z, const Vec3 &c) {
    return max_distance_sq(active_isa(), x, y, z, c);
}

}  // namespace kraus_forge::simd
