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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <string>

#include "kraus_forge/bath.h"
#include "kraus_forge/error.h"

namespace kraus_forge {

namespace {

constexpr double kRelativeTarget = 1e-6;
constexpr double kPanelTolerance = 1e-12;
constexpr unsigned kMaxDepth = 25;

struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

template <typename F>
Estimate integrate(F f, double a, double b) {
    if (!(b > a)) {
        return {};
    }
    Estimate out;
    out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, kMaxDepth, kPanelTolerance, &out.error);
    return out;
}

// P.V. ∫_0^{ω_max} g(ω)/(ω0 − ω) dω for a smooth g.
template <typename G>
Estimate principal_value(G g, double omega0, double omega_max, double eps) {
    const auto regular = [&](double w) { return g(w) / (omega0 - w); };
    // ω = ω0 ± u: [g(ω0+u) − g(ω0−u)]/(−u), bounded as u → 0.
    const auto folded = [&](double u) { return -(g(omega0 + u) - g(omega0 - u)) / u; };
    const Estimate left = integrate(regular, 0.0, omega0 - eps);
    const Estimate window = integrate(folded, 0.0, eps);
    const Estimate right = integrate(regular, omega0 + eps, omega_max);
    return {left.value + window.value + right.value, left.error + window.error + right.error};
}

void check_accuracy(const Estimate &e, const char *name) {
    if (!std::isfinite(e.value) || e.error > kRelativeTarget * std::abs(e.value) + 1e-15) {
        throw Error(ErrorCode::QuadratureFailure, std::string(name) + " quadrature error " +
                                                      std::to_string(e.error) + " for value " +
                                                      std::to_string(e.value));
    }
}

}  // namespace

void validate(const BathSpectrum &bath) {
    const bool finite = std::isfinite(bath.alpha) && std::isfinite(bath.omega0) &&
                        std::isfinite(bath.omega_c) && std::isfinite(bath.temperature) &&
                        std::isfinite(bath.ohmicity);
    if (!finite || bath.alpha < 0.0 || !(bath.omega0 > 0.0) || !(bath.omega_c > 0.0) ||
        bath.temperature < 0.0 || !(bath.ohmicity > 0.0)) {
        throw Error(ErrorCode::InvalidParameter,
                    "bath needs alpha >= 0, omega0 > 0, omega_c > 0, T >= 0, s > 0");
    }
}

double spectral_density(const BathSpectrum &bath, double omega) {
    if (omega <= 0.0) {
        return 0.0;
    }
    const double shape = bath.ohmicity == 1.0
                             ? omega
                             : std::pow(omega, bath.ohmicity) * std::pow(bath.omega_c, 1.0 - bath.ohmicity);
    return bath.alpha * shape * std::exp(-omega / bath.omega_c);
}

double thermal_occupation(double omega, double temperature) {
    if (temperature == 0.0) {
        return 0.0;
    }
    const double ratio = omega / temperature;
    if (ratio > 700.0) {
        return std::exp(-ratio);
    }
    return 1.0 / std::expm1(ratio);
}

LambStarkShift lamb_stark_shift(const BathSpectrum &bath, std::optional<double> excision) {
    validate(bath);
    const double w0 = bath.omega0;
    const double wmax = bath.omega_max();
    if (!(w0 < wmax)) {
        throw Error(ErrorCode::InvalidParameter, "omega0 must lie inside (0, omega_max)");
    }
    const double reach = std::min(w0, wmax - w0);
    const double eps = excision.value_or(0.5 * reach);
    if (!(eps > 0.0 && eps <= reach)) {
        throw Error(ErrorCode::InvalidParameter, "excision half-width out of range");
    }

    LambStarkShift out;
    out.excision = eps;
    if (bath.alpha == 0.0) {
        return out;
    }

    const auto density = [&](double w) { return spectral_density(bath, w); };
    const Estimate delta = principal_value(density, w0, wmax, eps);
    check_accuracy(delta, "Lamb shift");
    out.delta = delta.value;
    out.error_delta = delta.error;

    if (bath.temperature > 0.0) {
        const auto thermal = [&](double w) {
            return spectral_density(bath, w) * thermal_occupation(w, bath.temperature);
        };
        const Estimate stark = principal_value(thermal, w0, wmax, eps);
        check_accuracy(stark, "Stark shift");
        out.delta_prime = stark.value;
        out.error_delta_prime = stark.error;
    }
    return out;
}

}  // namespace kraus_forge
