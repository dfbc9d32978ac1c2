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

#ifndef KRAUS_FORGE_BATH_H
#define KRAUS_FORGE_BATH_H

#include <optional>

namespace kraus_forge {

enum class SpectralModel {
    /// J(ω) = α ω^s ωc^{1−s} e^{−ω/ωc}; s = 1 is the plain ohmic case.
    OhmicExponential,
};

/// Bosonic bath in natural units (ħ = k_B = 1).
struct BathSpectrum {
    double alpha = 0.02;
    double omega0 = 10.0;
    double omega_c = 15.0;
    double temperature = 0.0;
    SpectralModel model = SpectralModel::OhmicExponential;
    double ohmicity = 1.0;

    /// Finite stand-in for the ω_max → ∞ limit of the bath integrals.
    double omega_max() const {
        return 50.0 * omega_c;
    }
};

/// Throws InvalidParameter for negative/non-finite couplings or temperature.
void validate(const BathSpectrum &bath);

double spectral_density(const BathSpectrum &bath, double omega);

/// Planck occupation 1/(e^{ω/T} − 1); zero at T = 0.
double thermal_occupation(double omega, double temperature);

struct LambStarkShift {
    /// P.V. ∫ J(ω')/(ω0 − ω') dω'.
    double delta = 0.0;
    /// P.V. ∫ J(ω') n̄(ω')/(ω0 − ω') dω'.
    double delta_prime = 0.0;
    double error_delta = 0.0;
    double error_delta_prime = 0.0;
    /// Half-width of the window around ω0 that is integrated by pairing.
    double excision = 0.0;
};

/// Principal-value shifts over [0, ω_max].
///
/// The window [ω0 − ε, ω0 + ε] is folded onto [0, ε] so the pole cancels
/// between ω0 ± u; the two outer panels carry a regular integrand. All three
/// pieces use adaptive Gauss–Kronrod. Throws QuadratureFailure when either
/// estimated error exceeds 1e-6 relative.
LambStarkShift lamb_stark_shift(const BathSpectrum &bath,
                                std::optional<double> excision = std::nullopt);

}  // namespace kraus_forge

#endif
