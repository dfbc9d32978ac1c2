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

#ifndef KRAUS_FORGE_KRAUS_PIPELINE_H
#define KRAUS_FORGE_KRAUS_PIPELINE_H

#include <optional>
#include <vector>

#include "kraus_forge/lindblad.h"
#include "kraus_forge/linalg.h"

namespace kraus_forge {

inline constexpr double kDefaultKrausCutoff = 1e-12;
/// Choi eigenvalues in [−kCpTolerance, 0) are roundoff and are clamped.
inline constexpr double kCpTolerance = 1e-10;

/// Choi matrix S of a qubit channel in the Hermitian basis, with its
/// eigensystem. Construction enforces Hermiticity (1e-12), tr S = 2 (1e-10)
/// and S ≥ −1e-10.
class ChoiMatrix {
   public:
    ChoiMatrix(const CMatrix<4> &entries, double time);

    const CMatrix<4> &entries() const {
        return entries_;
    }
    double time() const {
        return time_;
    }
    const EigenSystem<4> &eigensystem() const {
        return eigen_;
    }
    const std::array<double, 4> &eigenvalues() const {
        return eigen_.values;
    }

   private:
    CMatrix<4> entries_;
    double time_;
    EigenSystem<4> eigen_;
};

/// Ordered Kraus operators with the weights d_i they were built from. For
/// sets not built from a Choi spectrum, the weight of E is ‖E‖²_F, which is
/// what d_i equals for pipeline output.
class KrausSet {
   public:
    KrausSet() = default;
    explicit KrausSet(std::vector<QubitOperator> operators, std::vector<double> weights = {});

    static KrausSet identity();

    const std::vector<QubitOperator> &operators() const {
        return operators_;
    }
    const std::vector<double> &weights() const {
        return weights_;
    }
    std::size_t size() const {
        return operators_.size();
    }
    const QubitOperator &operator[](std::size_t k) const {
        return operators_[k];
    }

    /// Full Choi spectrum (including dropped eigenvalues) when the set came
    /// out of kraus_from_choi.
    const std::optional<std::array<double, 4>> &choi_eigenvalues() const {
        return choi_eigenvalues_;
    }
    void set_choi_eigenvalues(const std::array<double, 4> &values) {
        choi_eigenvalues_ = values;
    }

    /// max |Σ E†E − I| entrywise.
    double completeness_residual() const;

    /// Operators whose weight exceeds `cutoff`.
    KrausSet pruned(double cutoff) const;

    /// {U·E_k}: the channel followed by the unitary U.
    KrausSet left_multiplied(const QubitOperator &u) const;

   private:
    std::vector<QubitOperator> operators_;
    std::vector<double> weights_;
    std::optional<std::array<double, 4>> choi_eigenvalues_;
};

/// F = e^{L t}. Throws NegativeTime for t < 0.
SuperopMatrix propagate(const SuperopMatrix &generator, double t);

/// F·A in operator form: Σ_{s,r} F_sr tr(G_r A) G_s.
QubitOperator apply_propagator(const SuperopMatrix &propagator, const HermitianBasis &basis,
                               const QubitOperator &a);

/// S_nm = Σ_{s,r} F_sr tr[G_r G_n† G_s G_m].
///
/// Throws NotTracePreserving unless F's first row is (1, 0, 0, 0) within
/// 1e-10 and NotCompletelyPositive if S has an eigenvalue below −1e-10.
ChoiMatrix choi_from_propagator(const SuperopMatrix &propagator, const HermitianBasis &basis);

/// Σ_nm S_nm G_n A G_m†.
QubitOperator apply_choi(const ChoiMatrix &choi, const HermitianBasis &basis,
                         const QubitOperator &a);

/// E_i = √d_i Σ_j u_ji G_j for every eigenpair with d_i > cutoff, in
/// descending d_i order.
KrausSet kraus_from_choi(const ChoiMatrix &choi, const HermitianBasis &basis,
                         double cutoff = kDefaultKrausCutoff);

/// Generator → propagator → Choi → Kraus in one call.
KrausSet derive_kraus(const SuperopMatrix &generator, double t,
                      double cutoff = kDefaultKrausCutoff);

/// Σ E ρ E† for a density operator ρ; throws InvalidState otherwise.
QubitOperator apply_channel(const KrausSet &kraus, const QubitOperator &rho);

/// Σ E A E† for an arbitrary operator A.
QubitOperator apply_kraus(const KrausSet &kraus, const QubitOperator &a);

/// Choi matrix of a Kraus set in the given basis, Σ_i c_i c_i† with
/// c_ij = tr(G_j E_i).
CMatrix<4> choi_of(const KrausSet &kraus, const HermitianBasis &basis = HermitianBasis::pauli());

/// ‖Choi(K1) − Choi(K2)‖_F. Both sets must be complete within 1e-8.
double choi_distance(const KrausSet &k1, const KrausSet &k2);

/// Hermitian, unit trace and eigenvalues ≥ −tol.
bool is_density_operator(const QubitOperator &rho, double tol = 1e-12);

}  // namespace kraus_forge

#endif
