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

#ifndef KRAUS_FORGE_LINALG_H
#define KRAUS_FORGE_LINALG_H

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>

namespace kraus_forge {

using Complex = std::complex<double>;

namespace detail {
template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
}  // namespace detail

/// Dense row-major N×N matrix with value semantics. Only tiny sizes (2, 3, 4)
/// are used, so everything lives on the stack.
template <typename T, std::size_t N>
struct Matrix {
    std::array<T, N * N> data{};

    static constexpr std::size_t size = N;

    constexpr T &operator()(std::size_t row, std::size_t col) {
        return data[row * N + col];
    }
    constexpr const T &operator()(std::size_t row, std::size_t col) const {
        return data[row * N + col];
    }

    static constexpr Matrix zero() {
        return Matrix{};
    }
    static constexpr Matrix identity() {
        Matrix m{};
        for (std::size_t k = 0; k < N; ++k) {
            m(k, k) = T(1);
        }
        return m;
    }

    constexpr Matrix &operator+=(const Matrix &other) {
        for (std::size_t k = 0; k < N * N; ++k) {
            data[k] += other.data[k];
        }
        return *this;
    }
    constexpr Matrix &operator-=(const Matrix &other) {
        for (std::size_t k = 0; k < N * N; ++k) {
            data[k] -= other.data[k];
        }
        return *this;
    }
    constexpr Matrix &operator*=(T scalar) {
        for (auto &v : data) {
            v *= scalar;
        }
        return *this;
    }

    friend constexpr Matrix operator+(Matrix a, const Matrix &b) {
        return a += b;
    }
    friend constexpr Matrix operator-(Matrix a, const Matrix &b) {
        return a -= b;
    }
    friend constexpr Matrix operator-(Matrix a) {
        for (auto &v : a.data) {
            v = -v;
        }
        return a;
    }
    friend constexpr Matrix operator*(Matrix a, T scalar) {
        return a *= scalar;
    }
    friend constexpr Matrix operator*(T scalar, Matrix a) {
        return a *= scalar;
    }
    friend constexpr Matrix operator*(const Matrix &a, const Matrix &b) {
        Matrix out{};
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const T aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }
    friend constexpr bool operator==(const Matrix &, const Matrix &) = default;
};

template <std::size_t N>
using CMatrix = Matrix<Complex, N>;
template <std::size_t N>
using RMatrix = Matrix<double, N>;

/// 2×2 complex matrix: density operators, Kraus operators, basis elements.
using QubitOperator = CMatrix<2>;
using Vec3 = std::array<double, 3>;
using Mat3 = RMatrix<3>;

template <typename T, std::size_t N>
constexpr Matrix<T, N> adjoint(const Matrix<T, N> &m) {
    Matrix<T, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if constexpr (detail::is_complex<T>::value) {
                out(j, i) = std::conj(m(i, j));
            } else {
                out(j, i) = m(i, j);
            }
        }
    }
    return out;
}

template <typename T, std::size_t N>
constexpr T trace(const Matrix<T, N> &m) {
    T out{};
    for (std::size_t k = 0; k < N; ++k) {
        out += m(k, k);
    }
    return out;
}

template <typename T, std::size_t N>
double max_abs(const Matrix<T, N> &m) {
    double out = 0.0;
    for (const auto &v : m.data) {
        out = std::max(out, static_cast<double>(std::abs(v)));
    }
    return out;
}

template <typename T, std::size_t N>
double max_abs_diff(const Matrix<T, N> &a, const Matrix<T, N> &b) {
    return max_abs(a - b);
}

template <typename T, std::size_t N>
double frobenius_norm(const Matrix<T, N> &m) {
    double sum = 0.0;
    for (const auto &v : m.data) {
        sum += std::norm(v);
    }
    return std::sqrt(sum);
}

template <typename T, std::size_t N>
bool all_finite(const Matrix<T, N> &m) {
    for (const auto &v : m.data) {
        if constexpr (detail::is_complex<T>::value) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                return false;
            }
        } else if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

/// max |M - M†| entrywise.
template <std::size_t N>
double hermiticity_defect(const CMatrix<N> &m) {
    return max_abs_diff(m, adjoint(m));
}

template <std::size_t N>
CMatrix<N> to_complex(const RMatrix<N> &m) {
    CMatrix<N> out{};
    for (std::size_t k = 0; k < N * N; ++k) {
        out.data[k] = m.data[k];
    }
    return out;
}

/// ⟨A, B⟩ = tr(A† B).
template <std::size_t N>
Complex hs_inner(const CMatrix<N> &a, const CMatrix<N> &b) {
    Complex out{};
    for (std::size_t k = 0; k < N * N; ++k) {
        out += std::conj(a.data[k]) * b.data[k];
    }
    return out;
}

// Pauli operators in the σz eigenbasis {|0⟩, |1⟩}, σz|0⟩ = |0⟩.
namespace pauli {
QubitOperator identity();
QubitOperator x();
QubitOperator y();
QubitOperator z();
/// σ− = (σx − iσy)/2 = |1⟩⟨0|.
QubitOperator lowering();
/// σ+ = (σx + iσy)/2 = |0⟩⟨1|.
QubitOperator raising();
const std::array<QubitOperator, 3> &xyz();
}  // namespace pauli

/// exp(−i·angle·σz/2): rotates Bloch vectors about z by +angle.
QubitOperator z_rotation(double angle);

/// The orthonormal Hermitian operator basis {I, σx, σy, σz}/√2, in that order.
class HermitianBasis {
   public:
    static const HermitianBasis &pauli();

    const QubitOperator &operator[](std::size_t k) const {
        return elements_[k];
    }
    const std::array<QubitOperator, 4> &elements() const {
        return elements_;
    }

    /// Expansion coefficients c_k = tr(G_k A), so that A = Σ c_k G_k.
    std::array<Complex, 4> coefficients(const QubitOperator &a) const;
    QubitOperator combine(const std::array<Complex, 4> &coefficients) const;

   private:
    HermitianBasis();
    std::array<QubitOperator, 4> elements_;
};

template <std::size_t N>
struct EigenSystem {
    /// Sorted descending.
    std::array<double, N> values{};
    /// vectors[i] is the unit eigenvector for values[i].
    std::array<std::array<Complex, N>, N> vectors{};
};

/// Cyclic complex Jacobi diagonalisation of a Hermitian matrix.
///
/// Eigenvalues come back in descending order (stable for ties). Each
/// eigenvector is rephased so that its largest-magnitude component is real
/// and positive; among components whose magnitudes agree to a relative
/// 1e-10, the lowest index wins.
///
/// Throws NonHermitianInput if max|M − M†| > 1e-12, ConvergenceFailure if the
/// sweeps do not drive the off-diagonal mass to roundoff level.
template <std::size_t N>
EigenSystem<N> hermitian_eig(const CMatrix<N> &m);

/// e^{s·L} by scaling and squaring with a [13/13] Padé approximant.
///
/// The argument A = s·L is scaled by 2^-k so that ‖A/2^k‖₁ ≤ 5.3719, where
/// the Padé [13/13] backward error is below the double unit roundoff
/// (Higham, SIAM J. Matrix Anal. Appl. 26 (2005)); the result is then squared
/// k times. s = 0 or L = 0 returns the identity exactly. Throws
/// OverflowDetected for non-finite input, an unreasonably large scaling
/// exponent, or a non-finite result.
RMatrix<4> matrix_exp(const RMatrix<4> &l, double s);

/// Solves A·X = B by Gaussian elimination with partial pivoting.
template <std::size_t N>
RMatrix<N> solve(RMatrix<N> a, RMatrix<N> b);

double determinant(const Mat3 &m);
Vec3 apply(const Mat3 &m, const Vec3 &v);

}  // namespace kraus_forge

#endif
