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
#include <numeric>

#include "kraus_forge/error.h"
#include "kraus_forge/linalg.h"

namespace kraus_forge {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr int kMaxSweeps = 64;

template <std::size_t N>
double off_diagonal_mass(const CMatrix<N> &a) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t q = 0; q < N; ++q) {
            if (p != q) {
                off += std::norm(a(p, q));
            }
        }
    }
    return off;
}

// One two-sided rotation annihilating a(p, q). The 2×2 block is first made
// real symmetric by the phase diag(1, e^{-iα}) and then rotated by the usual
// real Jacobi angle; U = Φ·R acts on columns p, q.
template <std::size_t N>
void rotate(CMatrix<N> &a, CMatrix<N> &v, std::size_t p, std::size_t q) {
    const Complex b = a(p, q);
    const double beta = std::abs(b);
    if (beta == 0.0) {
        return;
    }
    const Complex phase = std::conj(b) / beta;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double zeta = (aqq - app) / (2.0 * beta);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex upp = c;
    const Complex upq = s;
    const Complex uqp = -s * phase;
    const Complex uqq = c * phase;

    for (std::size_t k = 0; k < N; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (std::size_t k = 0; k < N; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * beta;
    a(q, q) = aqq + t * beta;

    for (std::size_t k = 0; k < N; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

template <std::size_t N>
void canonicalize_phase(std::array<Complex, N> &vec) {
    double largest = 0.0;
    for (const auto &c : vec) {
        largest = std::max(largest, std::abs(c));
    }
    if (largest == 0.0) {
        return;
    }
    std::size_t pick = 0;
    for (std::size_t k = 0; k < N; ++k) {
        if (std::abs(vec[k]) >= largest * (1.0 - 1e-10)) {
            pick = k;
            break;
        }
    }
    const Complex rot = std::conj(vec[pick]) / std::abs(vec[pick]);
    for (auto &c : vec) {
        c *= rot;
    }
    vec[pick] = std::abs(vec[pick]);
}

}  // namespace

template <std::size_t N>
EigenSystem<N> hermitian_eig(const CMatrix<N> &m) {
    if (!all_finite(m)) {
        throw Error(ErrorCode::NonHermitianInput, "matrix has non-finite entries");
    }
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTolerance) {
        throw Error(ErrorCode::NonHermitianInput, "max|M - M^dagger| = " + std::to_string(defect));
    }

    CMatrix<N> a = (m + adjoint(m)) * Complex(0.5);
    CMatrix<N> v = CMatrix<N>::identity();
    const double scale = frobenius_norm(a);

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double off = off_diagonal_mass(a);
        if (off == 0.0 || std::sqrt(off) <= 1e-15 * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                rotate(a, v, p, q);
            }
        }
    }
    if (!converged) {
        throw Error(ErrorCode::ConvergenceFailure, "Jacobi sweeps did not converge");
    }

    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenSystem<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        const std::size_t col = order[i];
        out.values[i] = a(col, col).real();
        for (std::size_t k = 0; k < N; ++k) {
            out.vectors[i][k] = v(k, col);
        }
        canonicalize_phase(out.vectors[i]);
    }
    return out;
}

template EigenSystem<2> hermitian_eig(const CMatrix<2> &);
template EigenSystem<3> hermitian_eig(const CMatrix<3> &);
template EigenSystem<4> hermitian_eig(const CMatrix<4> &);

}  // namespace kraus_forge
