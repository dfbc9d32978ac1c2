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

#include "kraus_forge/lindblad.h"

#include <string>

#include "kraus_forge/error.h"

namespace kraus_forge {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-12;
constexpr double kImaginaryTolerance = 1e-10;

QubitOperator commutator(const QubitOperator &a, const QubitOperator &b) {
    return a * b - b * a;
}

QubitOperator anticommutator(const QubitOperator &a, const QubitOperator &b) {
    return a * b + b * a;
}

}  // namespace

LindbladGenerator::LindbladGenerator(QubitOperator hamiltonian, std::vector<JumpTerm> jumps)
    : hamiltonian_(hamiltonian), jumps_(std::move(jumps)) {
    if (!all_finite(hamiltonian_)) {
        throw Error(ErrorCode::InvalidGenerator, "Hamiltonian has non-finite entries");
    }
    if (hermiticity_defect(hamiltonian_) > kHermitianTolerance) {
        throw Error(ErrorCode::InvalidGenerator, "Hamiltonian is not Hermitian");
    }
    double scale = max_abs(hamiltonian_);
    for (const auto &jump : jumps_) {
        if (!std::isfinite(jump.rate) || jump.rate < 0.0) {
            throw Error(ErrorCode::InvalidGenerator, "jump rate must be finite and >= 0, got " +
                                                         std::to_string(jump.rate));
        }
        if (!all_finite(jump.op)) {
            throw Error(ErrorCode::InvalidGenerator, "jump operator has non-finite entries");
        }
        scale = std::max(scale, jump.rate * max_abs(jump.op) * max_abs(jump.op));
    }
    for (const auto &g : HermitianBasis::pauli().elements()) {
        const double tr = std::abs(trace((*this)(g)));
        if (tr > kTraceTolerance * std::max(1.0, scale)) {
            throw Error(ErrorCode::InvalidGenerator, "generator does not annihilate the trace");
        }
    }
}

LindbladGenerator LindbladGenerator::zero() {
    return LindbladGenerator(QubitOperator::zero(), {});
}

QubitOperator LindbladGenerator::operator()(const QubitOperator &a) const {
    QubitOperator out = commutator(hamiltonian_, a) * Complex(0.0, -1.0);
    for (const auto &jump : jumps_) {
        if (jump.rate == 0.0) {
            continue;
        }
        const QubitOperator jd = adjoint(jump.op);
        const QubitOperator dissipator =
            jump.op * a * jd - anticommutator(jd * jump.op, a) * Complex(0.5);
        out += dissipator * Complex(jump.rate);
    }
    return out;
}

LindbladGenerator operator+(const LindbladGenerator &a, const LindbladGenerator &b) {
    std::vector<JumpTerm> jumps = a.jumps_;
    jumps.insert(jumps.end(), b.jumps_.begin(), b.jumps_.end());
    return LindbladGenerator(a.hamiltonian_ + b.hamiltonian_, std::move(jumps));
}

QubitOperator apply_generator(const LindbladGenerator &gen, const QubitOperator &a) {
    return gen(a);
}

SuperopMatrix build_L(const LindbladGenerator &gen, const HermitianBasis &basis) {
    SuperopMatrix out;
    out.role = SuperopRole::Generator;
    for (std::size_t l = 0; l < 4; ++l) {
        const QubitOperator image = gen(basis[l]);
        for (std::size_t k = 0; k < 4; ++k) {
            const Complex v = trace(basis[k] * image);
            if (std::abs(v.imag()) > kImaginaryTolerance) {
                throw Error(ErrorCode::NonRealGeneratorMatrix,
                            "L(" + std::to_string(k) + "," + std::to_string(l) +
                                ") has imaginary part " + std::to_string(v.imag()));
            }
            out.entries(k, l) = v.real();
        }
    }
    // Row 0 is tr(Λ(G_l))/√2, which the constructor already bounded by 1e-12.
    for (std::size_t l = 0; l < 4; ++l) {
        out.entries(0, l) = 0.0;
    }
    return out;
}

}  // namespace kraus_forge
