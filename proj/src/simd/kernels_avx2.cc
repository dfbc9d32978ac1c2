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

// Compiled with -mavx2; nothing here may be reached without a runtime check.
#include <immintrin.h>

#include "kernels.h"

namespace kraus_forge::simd::kernels {

void affine3_avx2(const double *m, const double *b, const double *x, const double *y,
                  const double *z, double *ox, double *oy, double *oz, std::size_t n) {
    const __m256d m0 = _mm256_set1_pd(m[0]), m1 = _mm256_set1_pd(m[1]), m2 = _mm256_set1_pd(m[2]);
    const __m256d m3 = _mm256_set1_pd(m[3]), m4 = _mm256_set1_pd(m[4]), m5 = _mm256_set1_pd(m[5]);
    const __m256d m6 = _mm256_set1_pd(m[6]), m7 = _mm256_set1_pd(m[7]), m8 = _mm256_set1_pd(m[8]);
    const __m256d b0 = _mm256_set1_pd(b[0]), b1 = _mm256_set1_pd(b[1]), b2 = _mm256_set1_pd(b[2]);

    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d px = _mm256_loadu_pd(x + k);
        const __m256d py = _mm256_loadu_pd(y + k);
        const __m256d pz = _mm256_loadu_pd(z + k);
        __m256d rx = _mm256_add_pd(_mm256_mul_pd(m0, px), _mm256_mul_pd(m1, py));
        __m256d ry = _mm256_add_pd(_mm256_mul_pd(m3, px), _mm256_mul_pd(m4, py));
        __m256d rz = _mm256_add_pd(_mm256_mul_pd(m6, px), _mm256_mul_pd(m7, py));
        rx = _mm256_add_pd(_mm256_add_pd(rx, _mm256_mul_pd(m2, pz)), b0);
        ry = _mm256_add_pd(_mm256_add_pd(ry, _mm256_mul_pd(m5, pz)), b1);
        rz = _mm256_add_pd(_mm256_add_pd(rz, _mm256_mul_pd(m8, pz)), b2);
        _mm256_storeu_pd(ox + k, rx);
        _mm256_storeu_pd(oy + k, ry);
        _mm256_storeu_pd(oz + k, rz);
    }
    affine3_scalar(m, b, x + k, y + k, z + k, ox + k, oy + k, oz + k, n - k);
}

double max_distance_sq_avx2(const double *x, const double *y, const double *z, std::size_t n,
                            double cx, double cy, double cz) {
    const __m256d vx = _mm256_set1_pd(cx);
    const __m256d vy = _mm256_set1_pd(cy);
    const __m256d vz = _mm256_set1_pd(cz);
    __m256d best = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + k), vx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + k), vy);
        const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(z + k), vz);
        const __m256d d = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), _mm256_mul_pd(dz, dz));
        best = _mm256_max_pd(best, d);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double out = lanes[0];
    for (int j = 1; j < 4; ++j) {
        out = lanes[j] > out ? lanes[j] : out;
    }
    const double tail = max_distance_sq_scalar(x + k, y + k, z + k, n - k, cx, cy, cz);
    return tail > out ? tail : out;
}

}  // namespace kraus_forge::simd::kernels
