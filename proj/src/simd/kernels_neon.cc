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

#include <arm_neon.h>

#include "kernels.h"

namespace kraus_forge::simd::kernels {

void affine3_neon(const double *m, const double *b, const double *x, const double *y,
                  const double *z, double *ox, double *oy, double *oz, std::size_t n) {
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const float64x2_t px = vld1q_f64(x + k);
        const float64x2_t py = vld1q_f64(y + k);
        const float64x2_t pz = vld1q_f64(z + k);
        // vmulq/vaddq only: vfmaq would round differently from the scalar path.
        for (int row = 0; row < 3; ++row) {
            float64x2_t r = vaddq_f64(vmulq_n_f64(px, m[3 * row]), vmulq_n_f64(py, m[3 * row + 1]));
            r = vaddq_f64(vaddq_f64(r, vmulq_n_f64(pz, m[3 * row + 2])), vdupq_n_f64(b[row]));
            double *dst = row == 0 ? ox : (row == 1 ? oy : oz);
            vst1q_f64(dst + k, r);
        }
    }
    affine3_scalar(m, b, x + k, y + k, z + k, ox + k, oy + k, oz + k, n - k);
}

double max_distance_sq_neon(const double *x, const double *y, const double *z, std::size_t n,
                            double cx, double cy, double cz) {
    float64x2_t best = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const float64x2_t dx = vsubq_f64(vld1q_f64(x + k), vdupq_n_f64(cx));
        const float64x2_t dy = vsubq_f64(vld1q_f64(y + k), vdupq_n_f64(cy));
        const float64x2_t dz = vsubq_f64(vld1q_f64(z + k), vdupq_n_f64(cz));
        const float64x2_t d =
            vaddq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)), vmulq_f64(dz, dz));
        best = vmaxq_f64(best, d);
    }
    const double out = vmaxvq_f64(best);
    const double tail = max_distance_sq_scalar(x + k, y + k, z + k, n - k, cx, cy, cz);
    return tail > out ? tail : out;
}

}  // namespace kraus_forge::simd::kernels
