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

#include "kraus_forge/linalg.h"

#include <utility>

namespace kraus_forge {

namespace pauli {

QubitOperator identity() {
    return QubitOperator::identity();
}

QubitOperator x() {
    QubitOperator m{};
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

QubitOperator y() {
    QubitOperator m{};
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}

QubitOperator z() {
    QubitOperator m{};
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

QubitOperator lowering() {
    QubitOperator m{};
    m(1, 0) = 1.0;
    return m;
}

QubitOperator raising() {
    QubitOperator m{};
    m(0, 1) = 1.0;
    return m;
}

const std::array<QubitOperator, 3> &xyz() {
    static const std::array<QubitOperator, 3> ops{x(), y(), z()};
    return ops;
}

}  // namespace pauli

QubitOperator z_rotation(double angle) {
    QubitOperator m{};
    m(0, 0) = std::polar(1.0, -angle / 2);
    m(1, 1) = std::polar(1.0, angle / 2);
    return m;
}

HermitianBasis::HermitianBasis() {
    const double h = 1.0 / std::sqrt(2.0);
    elements_ = {pauli::identity() * Complex(h), pauli::x() * Complex(h), pauli::y() * Complex(h),
                 pauli::z() * Complex(h)};
}

const HermitianBasis &HermitianBasis::pauli() {
    static const HermitianBasis basis;
    return basis;
}

std::array<Complex, 4> HermitianBasis::coefficients(const QubitOperator &a) const {
    std::array<Complex, 4> c{};
    for (std::size_t k = 0; k < 4; ++k) {
        // G_k is Hermitian, so tr(G_k A) = ⟨G_k, A⟩.
        c[k] = hs_inner(elements_[k], a);
    }
    return c;
}

QubitOperator HermitianBasis::combine(const std::array<Complex, 4> &coefficients) const {
    QubitOperator out{};
    for (std::size_t k = 0; k < 4; ++k) {
        out += elements_[k] * coefficients[k];
    }
    return out;
}

template <std::size_t N>
RMatrix<N> solve(RMatrix<N> a, RMatrix<N> b) {
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) {
                pivot = r;
            }
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < N; ++c) {
                std::swap(a(col, c), a(pivot, c));
                std::swap(b(col, c), b(pivot, c));
            }
        }
        const double d = a(col, col);
        for (std::size_t r = col + 1; r < N; ++r) {
            const double f = a(r, col) / d;
            if (f == 0.0) {
                continue;
            }
            for (std::size_t c = col; c < N; ++c) {
                a(r, c) -= f * a(col, c);
            }
            for (std::size_t c = 0; c < N; ++c) {
                b(r, c) -= f * b(col, c);
            }
        }
    }
    RMatrix<N> x{};
    for (std::size_t c = 0; c < N; ++c) {
        for (std::size_t r = N; r-- > 0;) {
            double acc = b(r, c);
            for (std::size_t k = r + 1; k < N; ++k) {
                acc -= a(r, k) * x(k, c);
            }
            x(r, c) = acc / a(r, r);
        }
    }
    return x;
}

template RMatrix<3> solve(RMatrix<3>, RMatrix<3>);
template RMatrix<4> solve(RMatrix<4>, RMatrix<4>);

double determinant(const Mat3 &m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Vec3 apply(const Mat3 &m, const Vec3 &v) {
    Vec3 out{};
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    }
    return out;
}

}  // namespace kraus_forge
