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

#ifndef KRAUS_FORGE_SIMD_H
#define KRAUS_FORGE_SIMD_H

#include <span>
#include <string_view>
#include <vector>

#include "kraus_forge/linalg.h"

namespace kraus_forge::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Scalar first, then whatever vector units this CPU supports.
std::vector<Isa> available_isas();

/// Widest supported ISA, unless KRAUS_FORGE_ISA names another supported one
/// ("scalar", "avx2", "neon").
Isa active_isa();

/// out = M·p + b for every point of a structure-of-arrays cloud. All spans
/// must have the same length; in-place use is allowed.
void affine3(Isa isa, const Mat3 &m, const Vec3 &b, std::span<const double> x,
             std::span<const double> y, std::span<const double> z, std::span<double> out_x,
             std::span<double> out_y, std::span<double> out_z);

void affine3(const Mat3 &m, const Vec3 &b, std::span<const double> x, std::span<const double> y,
             std::span<const double> z, std::span<double> out_x, std::span<double> out_y,
             std::span<double> out_z);

/// max_k |p_k − c|². Zero for an empty cloud.
double max_distance_sq(Isa isa, std::span<const double> x, std::span<const double> y,
                       std::span<const double> z, const Vec3 &c);

double max_distance_sq(std::span<const double> x, std::span<const double> y,
                       std::span<const double> z, const Vec3 &c);

}  // namespace kraus_forge::simd

#endif
