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

#ifndef KRAUS_FORGE_LINDBLAD_H
#define KRAUS_FORGE_LINDBLAD_H

#include <vector>

#include "kraus_forge/linalg.h"

namespace kraus_forge {

/// Which side of dF/dt = L·F a 4×4 matrix plays.
enum class SuperopRole { Generator, Propagator };

/// Real 4×4 matrix in the Hermitian operator basis: L (units 1/time) or
/// F = e^{Lt} (dimensionless). `time` is the evolution time for propagators.
struct SuperopMatrix {
    RMatrix<4> entries{};
    SuperopRole role = SuperopRole::Generator;
    double time = 0.0;
};

struct JumpTerm {
    double rate = 0.0;
    QubitOperator op{};
};

/// Time-independent generator Λ(A) = −i[H, A] + Σ_k γ_k (J_k A J_k† − ½{J_k†J_k, A}).
///
/// ħ = 1. Construction rejects a non-Hermitian H, negative rates and
/// non-finite entries.
class LindbladGenerator {
   public:
    LindbladGenerator(QubitOperator hamiltonian, std::vector<JumpTerm> jumps);

    static LindbladGenerator zero();

    const QubitOperator &hamiltonian() const {
        return hamiltonian_;
    }
    const std::vector<JumpTerm> &jumps() const {
        return jumps_;
    }

    QubitOperator operator()(const QubitOperator &a) const;

    /// Λ1 + Λ2: Hamiltonians add, jump lists concatenate.
    friend LindbladGenerator operator+(const LindbladGenerator &a, const LindbladGenerator &b);

   private:
    QubitOperator hamiltonian_;
    std::vector<JumpTerm> jumps_;
};

QubitOperator apply_generator(const LindbladGenerator &gen, const QubitOperator &a);

/// L_kl = tr[G_k Λ(G_l)]. Imaginary residue above 1e-10 raises
/// NonRealGeneratorMatrix; smaller residue is dropped.
SuperopMatrix build_L(const LindbladGenerator &gen, const HermitianBasis &basis);

}  // namespace kraus_forge

#endif
