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

#ifndef KRAUS_FORGE_PD_CHANNEL_H
#define KRAUS_FORGE_PD_CHANNEL_H

#include "kraus_forge/bath.h"
#include "kraus_forge/kraus_pipeline.h"
#include "kraus_forge/lindblad.h"

namespace kraus_forge {

/// Pure dephasing dρ/dt = r(σz ρ σz − ρ).
struct PdParams {
    double r = 0.0;
};

void validate(const PdParams &params);

/// Lindblad form with the single jump σz at rate r (σz² = I makes the two
/// forms identical).
LindbladGenerator pd_generator(const PdParams &params);

/// diag(0, −2r, −2r, 0).
SuperopMatrix pd_L(const PdParams &params);

/// {√((1−e^{−2rt})/2)·σz, √((1+e^{−2rt})/2)·I}.
KrausSet pd_kraus(const PdParams &params, double t);

/// {√(1 − p/2)·I, √(p/2)·σz} for a dephasing probability p ∈ [0, 1].
KrausSet pd_standard_kraus(double p);

/// r = 2π lim_{ω→0} J(ω) n̄(ω). For J ∝ ω^s: s = 1 gives 2παT, s > 1 gives
/// 0, and s < 1 at T > 0 diverges (DivergentLimit).
PdParams pd_rate_from_physics(const BathSpectrum &bath);

/// Bloch vector at time t of the state with angles (u, v):
/// (e^{−2rt} sin v cos u, e^{−2rt} sin v sin u, cos v).
Vec3 pd_bloch(const PdParams &params, double t, double u, double v);

}  // namespace kraus_forge

#endif
