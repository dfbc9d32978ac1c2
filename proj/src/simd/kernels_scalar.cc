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

#include <algorithm>

#include "kernels.h"

namespace kraus_forge::simd::kernels {

void affine3_scalar(const double *m, const double *b, const double *x, const double *y,
                    const double *z, double *ox, double *oy, double *oz, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double px = x[k];
        const double py = y[k];
        const double pz = z[k];
        ox[k] = ((m[0] * px + m[1] * py) + m[2] * pz) + b[0];
        oy[k] = ((m[3] * px + m[4] * py) + m[5] * pz) + b[1];
        oz[k] = ((m[6] * px + m[7] * py) + m[8] * pz) + b[2];
    }
}

double max_distance_sq_scalar(const double *x, const double *y, const double *z, std::size_t n,
                              double cx, double cy, double cz) {
    double best = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = x[k] - cx;
        const double dy = y[k] - cy;
        const double dz = z[k] - cz;
        best = std::max(best, (dx * dx + dy * dy) + dz * dz);
    }
    return best;
}

}  // namespace kraus_forge::simd::kernels
