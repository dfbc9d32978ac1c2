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

#include "kraus_forge/kraus_pipeline.h"

#include <string>

#include "kraus_forge/error.h"

namespace kraus_forge {

namespace {

constexpr double kChoiTraceTolerance = 1e-10;
constexpr double kPropagatorRowTolerance = 1e-10;
constexpr double kCompletenessTolerance = 1e-10;
constexpr double kDistanceCompleteness = 1e-8;

// T[r][n][s][m] = tr[G_r G_n† G_s G_m] for the Pauli basis.
using ChoiTensor = std::array<std::array<std::array<std::array<Complex, 4>, 4>, 4>, 4>;

ChoiTensor build_choi_tensor(const HermitianBasis &basis) {
    ChoiTensor t{};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t n = 0; n < 4; ++n) {
            const QubitOperator rn = basis[r] * adjoint(basis[n]);
            for (std::size_t s = 0; s < 4; ++s) {
                const QubitOperator rns = rn * basis[s];
                for (std::size_t m = 0; m < 4; ++m) {
                    t[r][n][s][m] = trace(rns * basis[m]);
                }
            }
        }
    }
    return t;
}

}  // namespace

ChoiMatrix::ChoiMatrix(const CMatrix<4> &entries, double time) : entries_(entries), time_(time) {
    const double tr_defect = std::abs(trace(entries_) - Complex(2.0));
    if (tr_defect > kChoiTraceTolerance) {
        throw Error(ErrorCode::NotTracePreserving,
                    "Choi trace differs from 2 by " + std::to_string(tr_defect));
    }
    eigen_ = hermitian_eig(entries_);
    if (eigen_.values[3] < -kCpTolerance) {
        throw Error(ErrorCode::NotCompletelyPositive,
                    "Choi eigenvalue " + std::to_string(eigen_.values[3]));
    }
}

KrausSet::KrausSet(std::vector<QubitOperator> operators, std::vector<double> weights)
    : operators_(std::move(operators)), weights_(std::move(weights)) {
    if (operators_.size() > 4) {
        throw Error(ErrorCode::InvalidParameter, "a qubit channel needs at most 4 Kraus operators");
    }
    if (weights_.empty()) {
        for (const auto &op : operators_) {
            weights_.push_back(std::pow(frobenius_norm(op), 2));
        }
    } else if (weights_.size() != operators_.size()) {
        throw Error(ErrorCode::InvalidParameter, "weights and operators differ in length");
    }
}

KrausSet KrausSet::identity() {
    return KrausSet({QubitOperator::identity()}, {2.0});
}

double KrausSet::completeness_residual() const {
    QubitOperator sum{};
    for (const auto &e : operators_) {
        sum += adjoint(e) * e;
    }
    return max_abs_diff(sum, QubitOperator::identity());
}

KrausSet KrausSet::pruned(double cutoff) const {
    std::vector<QubitOperator> ops;
    std::vector<double> weights;
    for (std::size_t k = 0; k < operators_.size(); ++k) {
        if (weights_[k] > cutoff) {
            ops.push_back(operators_[k]);
            weights.push_back(weights_[k]);
        }
    }
    KrausSet out(std::move(ops), std::move(weights));
    out.choi_eigenvalues_ = choi_eigenvalues_;
    return out;
}

KrausSet KrausSet::left_multiplied(const QubitOperator &u) const {
    std::vector<QubitOperator> ops;
    for (const auto &e : operators_) {
        ops.push_back(u * e);
    }
    return KrausSet(std::move(ops), weights_);
}

SuperopMatrix propagate(const SuperopMatrix &generator, double t) {
    if (!(t >= 0.0)) {
        throw Error(ErrorCode::NegativeTime, "propagation time must be >= 0, got " + std::to_string(t));
    }
    SuperopMatrix out;
    out.role = SuperopRole::Propagator;
    out.time = t;
    out.entries = matrix_exp(generator.entries, t);
    return out;
}

QubitOperator apply_propagator(const SuperopMatrix &propagator, const HermitianBasis &basis,
                               const QubitOperator &a) {
    const auto c = basis.coefficients(a);
    std::array<Complex, 4> image{};
    for (std::size_t s = 0; s < 4; ++s) {
        for (std::size_t r = 0; r < 4; ++r) {
            image[s] += propagator.entries(s, r) * c[r];
        }
    }
    return basis.combine(image);
}

ChoiMatrix choi_from_propagator(const SuperopMatrix &propagator, const HermitianBasis &basis) {
    const auto &f = propagator.entries;
    for (std::size_t c = 0; c < 4; ++c) {
        const double expected = c == 0 ? 1.0 : 0.0;
        if (!(std::abs(f(0, c) - expected) <= kPropagatorRowTolerance)) {
            throw Error(ErrorCode::NotTracePreserving, "propagator first row is not (1, 0, 0, 0)");
        }
    }
    const ChoiTensor t = build_choi_tensor(basis);
    CMatrix<4> s{};
    for (std::size_t n = 0; n < 4; ++n) {
        for (std::size_t m = 0; m < 4; ++m) {
            Complex acc{};
            for (std::size_t sr = 0; sr < 4; ++sr) {
                for (std::size_t r = 0; r < 4; ++r) {
                    acc += f(sr, r) * t[r][n][sr][m];
                }
            }
            s(n, m) = acc;
        }
    }
    return ChoiMatrix(s, propagator.time);
}

QubitOperator apply_choi(const ChoiMatrix &choi, const HermitianBasis &basis,
                         const QubitOperator &a) {
    QubitOperator out{};
    for (std::size_t n = 0; n < 4; ++n) {
        const QubitOperator left = basis[n] * a;
        for (std::size_t m = 0; m < 4; ++m) {
            out += left * adjoint(basis[m]) * choi.entries()(n, m);
        }
    }
    return out;
}

KrausSet kraus_from_choi(const ChoiMatrix &choi, const HermitianBasis &basis, double cutoff) {
    const auto &eig = choi.eigensystem();
    std::vector<QubitOperator> ops;
    std::vector<double> weights;
    std::array<double, 4> spectrum{};
    for (std::size_t i = 0; i < 4; ++i) {
        double d = eig.values[i];
        if (d < -kCpTolerance) {
            throw Error(ErrorCode::NotCompletelyPositive, "Choi eigenvalue " + std::to_string(d));
        }
        d = std::max(d, 0.0);
        spectrum[i] = d;
        if (d <= cutoff) {
            continue;
        }
        const double amp = std::sqrt(d);
        std::array<Complex, 4> coeff{};
        for (std::size_t j = 0; j < 4; ++j) {
            coeff[j] = amp * eig.vectors[i][j];
        }
        ops.push_back(basis.combine(coeff));
        weights.push_back(d);
    }
    KrausSet out(std::move(ops), std::move(weights));
    out.set_choi_eigenvalues(spectrum);
    const double residual = out.completeness_residual();
    if (residual > kCompletenessTolerance) {
        throw Error(ErrorCode::NotTracePreserving,
                    "extracted Kraus set completeness residual " + std::to_string(residual));
    }
    return out;
}

KrausSet derive_kraus(const SuperopMatrix &generator, double t, double cutoff) {
    const auto &basis = HermitianBasis::pauli();
    return kraus_from_choi(choi_from_propagator(propagate(generator, t), basis), basis, cutoff);
}

bool is_density_operator(const QubitOperator &rho, double tol) {
    if (!all_finite(rho) || hermiticity_defect(rho) > tol) {
        return false;
    }
    if (std::abs(trace(rho) - Complex(1.0)) > tol) {
        return false;
    }
    // 2×2 Hermitian: eigenvalues are tr/2 ± √((a−d)²/4 + |b|²).
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double radius = std::hypot((a - d) / 2, std::abs(rho(0, 1)));
    return (a + d) / 2 - radius >= -tol;
}

QubitOperator apply_kraus(const KrausSet &kraus, const QubitOperator &a) {
    QubitOperator out{};
    for (const auto &e : kraus.operators()) {
        out += e * a * adjoint(e);
    }
    return out;
}

QubitOperator apply_channel(const KrausSet &kraus, const QubitOperator &rho) {
    if (!is_density_operator(rho)) {
        throw Error(ErrorCode::InvalidState, "input is not a density operator");
    }
    return apply_kraus(kraus, rho);
}

CMatrix<4> choi_of(const KrausSet &kraus, const HermitianBasis &basis) {
    CMatrix<4> s{};
    for (const auto &e : kraus.operators()) {
        const auto c = basis.coefficients(e);
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                s(j, k) += c[j] * std::conj(c[k]);
            }
        }
    }
    return s;
}

double choi_distance(const KrausSet &k1, const KrausSet &k2) {
    for (const auto *k : {&k1, &k2}) {
        const double residual = k->completeness_residual();
        if (residual > kDistanceCompleteness) {
            throw Error(ErrorCode::IncompleteKrausSet,
                        "completeness residual " + std::to_string(residual));
        }
    }
    return frobenius_norm(choi_of(k1) - choi_of(k2));
}

}  // namespace kraus_forge
