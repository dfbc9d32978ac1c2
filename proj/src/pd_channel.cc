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

#include "kraus_forge/pd_channel.h"

#include <numbers>
#include <string>

#include "kraus_forge/error.h"

namespace kraus_forge {

void validate(const PdParams &params) {
    if (!std::isfinite(params.r) || params.r < 0.0) {
        throw Error(ErrorCode::InvalidParameter, "dephasing rate must be finite and >= 0");
    }
}

LindbladGenerator pd_generator(const PdParams &params) {
    validate(params);
    return LindbladGenerator(QubitOperator::zero(), {{params.r, pauli::z()}});
}

SuperopMatrix pd_L(const PdParams &params) {
    validate(params);
    SuperopMatrix out;
    out.role = SuperopRole::Generator;
    out.entries(1, 1) = -2.0 * params.r;
    out.entries(2, 2) = -2.0 * params.r;
    return out;
}

KrausSet pd_kraus(const PdParams &params, double t) {
    validate(params);
    if (!(t >= 0.0)) {
        throw Error(ErrorCode::NegativeTime, "t must be >= 0");
    }
    const double p = -std::expm1(-2.0 * params.r * t);
    const double coherent = std::exp(-2.0 * params.r * t);
    return KrausSet({pauli::z() * Complex(std::sqrt(p / 2.0)),
                     pauli::identity() * Complex(std::sqrt((1.0 + coherent) / 2.0))});
}

KrausSet pd_standard_kraus(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "dephasing probability must be in [0, 1]");
    }
    return KrausSet({pauli::identity() * Complex(std::sqrt(1.0 - p / 2.0)),
                     pauli::z() * Complex(std::sqrt(p / 2.0))});
}

PdParams pd_rate_from_physics(const BathSpectrum &bath) {
    validate(bath);
    if (bath.temperature == 0.0 || bath.ohmicity > 1.0) {
        return PdParams{0.0};
    }
    if (bath.ohmicity < 1.0) {
        throw Error(ErrorCode::DivergentLimit, "J(w) n(w) diverges as w -> 0 for ohmicity " +
                                                   std::to_string(bath.ohmicity));
    }
    // J ≈ αω and n̄ ≈ T/ω near ω = 0.
    return PdParams{2.0 * std::numbers::pi * bath.alpha * bath.temperature};
}

Vec3 pd_bloch(const PdParams &params, double t, double u, double v) {
    validate(params);
    if (!(t >= 0.0)) {
        throw Error(ErrorCode::NegativeTime, "t must be >= 0");
    }
    const double decay = std::exp(-2.0 * params.r * t);
    return {decay * std::sin(v) * std::cos(u), decay * std::sin(v) * std::sin(u), std::cos(v)};
}

}  // namespace kraus_forge
