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

#ifndef KRAUS_FORGE_SRC_SIMD_KERNELS_H
#define KRAUS_FORGE_SRC_SIMD_KERNELS_H

#include <cstddef>

// Raw kernels. m is a row-major 3×3, b a 3-vector. Every variant evaluates
// ((m0·x + m1·y) + m2·z) + b0 in that order with separate multiplies and
// adds, so all ISAs produce bitwise-identical output.
namespace kraus_forge::simd::kernels {

void affine3_scalar(const double *m, const double *b, const double *x, const double *y,
                    const double *z, double *ox, double *oy, double *oz, std::size_t n);
double max_distance_sq_scalar(const double *x, const double *y, const double *z, std::size_t n,
                              double cx, double cy, double cz);

#if defined(__x86_64__) || defined(_M_X64)
void affine3_avx2(const double *m, const double *b, const double *x, const double *y,
                  const double *z, double *ox, double *oy, double *oz, std::size_t n);
double max_distance_sq_avx2(const double *x, const double *y, const double *z, std::size_t n,
                            double cx, double cy, double cz);
#endif

#if defined(__aarch64__)
void affine3_neon(const double *m, const double *b, const double *x, const double *y,
                  const double *z, double *ox, double *oy, double *oz, std::size_t n);
double max_distance_sq_neon(const double *x, const double *y, const double *z, std::size_t n,
                            double cx, double cy, double cz);
#endif

}  // namespace kraus_forge::simd::kernels

#endif
