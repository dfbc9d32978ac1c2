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

#ifndef KRAUS_FORGE_GAD_CHANNEL_H
#define KRAUS_FORGE_GAD_CHANNEL_H

#include <array>
#include <optional>

#include "kraus_forge/bath.h"
#include "kraus_forge/kraus_pipeline.h"
#include "kraus_forge/lindblad.h"

namespace kraus_forge {

/// Rates of the generalized amplitude damping master equation
///   dρ/dt = −i x[σz, ρ] + y D[σ−]ρ + z D[σ+]ρ,
/// with x the Lamb + Stark shift, y = 2πJ(ω0)(n̄+1), z = 2πJ(ω0)n̄.
/// Requires y > z ≥ 0.
struct GadRates {
    double x = 0.0;
    double y = 1.0;
    double z = 0.0;
};

/// Dimensionless form: θ = 4x/(y+z), Ω = −2(y−z)/(y+z) ∈ [−2, 0), τ = (y+z)t/2.
struct GadScaled {
    double theta = 0.0;
    double omega = -2.0;
    double tau = 0.0;
};

/// Shorthand quantities of the closed-form third and fourth Kraus operators.
struct GadIntermediates {
    Complex a;
    double b_plus = 0.0;
    double b_minus = 0.0;
    double c_plus = 0.0;
    double c_minus = 0.0;
    Complex d;
    double e_plus = 0.0;
    double e_minus = 0.0;
};

/// Parameters of the textbook four-operator GAD set:
/// λ = 1 − e^{−γ0(2N_th+1)t}, p = (N_th+1)/(2N_th+1).
struct ReferenceGadParams {
    double lambda_t = 0.0;
    double p = 1.0;
    double n_th = 0.0;
    double gamma0 = 0.0;

    static ReferenceGadParams from_thermal(double n_th, double gamma0, double t);
    /// γ0 = y − z (so that γ0(2N_th+1) = y + z).
    static ReferenceGadParams from_rates(const GadRates &rates, double t);
    /// Time measured in units where y + z = 2, so λ = 1 − e^{−2τ}, p = (2−Ω)/4.
    static ReferenceGadParams from_scaled(const GadScaled &scaled);
};

void validate(const GadRates &rates);
void validate(const GadScaled &scaled);

GadScaled rescale(const GadRates &rates, double t);

/// H = xσz, jumps (y, σ−) and (z, σ+).
LindbladGenerator gad_generator(const GadRates &rates);

/// Closed-form L in the {I, σx, σy, σz}/√2 basis.
SuperopMatrix gad_L(const GadRates &rates);

/// (2/(y+z))·L: the generator of evolution in τ.
SuperopMatrix gad_scaled_L(double theta, double omega);

/// Closed-form e^{τ·scaled L}.
SuperopMatrix gad_F_closed(const GadScaled &scaled);

/// Choi spectrum in the order
///   q(2−Ω)/4, q(2+Ω)/4, (2(1+e^{−2τ}) ∓ √(16e^{−2τ} + Ω²q²))/4,
/// with q = 1 − e^{−2τ}. The small root is evaluated in cancellation-free form.
std::array<double, 4> gad_choi_eigenvalues(const GadScaled &scaled);

GadIntermediates gad_intermediates(const GadScaled &scaled);

/// The four closed-form operators E1..E4 in that order; weights are ‖E‖²_F.
/// Throws SingularTime below τ = 1e-8 where the formulas are 0/0.
KrausSet gad_kraus_closed(const GadScaled &scaled);

/// gad_kraus_closed, or the identity set below τ = 1e-8.
KrausSet gad_kraus(const GadScaled &scaled);

/// τ → ∞ limit of the closed-form set.
KrausSet gad_kraus_asymptotic(double omega);

KrausSet reference_gad_kraus(const ReferenceGadParams &params);

/// Zero-temperature AD pair {√(1−λ)|0⟩⟨0| + |1⟩⟨1|, √λ|1⟩⟨0|}. The ground
/// state is |1⟩ (σz = −1), matching the generator's σ− = |1⟩⟨0| jump.
KrausSet textbook_ad_kraus(double lambda);

/// y, z from the bath; x from the principal-value shifts unless
/// `shift_override` supplies it.
GadRates rates_from_physics(const BathSpectrum &bath,
                            std::optional<double> shift_override = std::nullopt);

}  // namespace kraus_forge

#endif
