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

#include "kraus_forge/error.h"
#include "kraus_forge/linalg.h"

namespace kraus_forge {

namespace {

using M4 = RMatrix<4>;

// Padé [13/13] numerator coefficients for exp.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr double kTheta13 = 5.371920351148152;
constexpr int kMaxSquarings = 1000;

double one_norm(const M4 &a) {
    double best = 0.0;
    for (std::size_t c = 0; c < 4; ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < 4; ++r) {
            col += std::abs(a(r, c));
        }
        best = std::max(best, col);
    }
    return best;
}

}  // namespace

RMatrix<4> matrix_exp(const RMatrix<4> &l, double s) {
    M4 a = l * s;
    if (!all_finite(a)) {
        throw Error(ErrorCode::OverflowDetected, "non-finite argument to matrix_exp");
    }
    const double norm = one_norm(a);
    if (norm == 0.0) {
        return M4::identity();
    }

    int squarings = 0;
    if (norm > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
        if (squarings > kMaxSquarings) {
            throw Error(ErrorCode::OverflowDetected, "scaling exponent out of range");
        }
        a *= std::ldexp(1.0, -squarings);
    }

    const M4 id = M4::identity();
    const M4 a2 = a * a;
    const M4 a4 = a2 * a2;
    const M4 a6 = a4 * a2;
    const auto &b = kPade13;

    const M4 u_inner = a6 * (a6 * b[13] + a4 * b[11] + a2 * b[9]) + a6 * b[7] + a4 * b[5] +
                       a2 * b[3] + id * b[1];
    const M4 u = a * u_inner;
    const M4 v = a6 * (a6 * b[12] + a4 * b[10] + a2 * b[8]) + a6 * b[6] + a4 * b[4] + a2 * b[2] +
                 id * b[0];

    M4 result = solve(v - u, v + u);
    for (int k = 0; k < squarings; ++k) {
        result = result * result;
    }
    if (!all_finite(result)) {
        throw Error(ErrorCode::OverflowDetected, "matrix_exp result overflowed");
    }
    return result;
}

}  // namespace kraus_forge
