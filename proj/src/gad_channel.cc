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

#include "kraus_forge/gad_channel.h"

#include <numbers>
#include <string>

#include "kraus_forge/error.h"

namespace kraus_forge {

namespace {

constexpr double kSingularTau = 1e-8;

bool finite_all(std::initializer_list<double> values) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

QubitOperator diag(Complex a, Complex d) {
    QubitOperator m{};
    m(0, 0) = a;
    m(1, 1) = d;
    return m;
}

QubitOperator lower_left(Complex v) {
    QubitOperator m{};
    m(1, 0) = v;
    return m;
}

QubitOperator upper_right(Complex v) {
    QubitOperator m{};
    m(0, 1) = v;
    return m;
}

}  // namespace

void validate(const GadRates &rates) {
    if (!finite_all({rates.x, rates.y, rates.z})) {
        throw Error(ErrorCode::InvalidParameter, "GAD rates must be finite");
    }
    if (!(rates.z >= 0.0) || !(rates.y > rates.z)) {
        throw Error(ErrorCode::InvalidParameter, "GAD rates need y > z >= 0, got y=" +
                                                     std::to_string(rates.y) +
                                                     " z=" + std::to_string(rates.z));
    }
}

void validate(const GadScaled &scaled) {
    if (!finite_all({scaled.theta, scaled.omega, scaled.tau})) {
        throw Error(ErrorCode::InvalidParameter, "scaled GAD parameters must be finite");
    }
    if (!(scaled.omega >= -2.0 && scaled.omega < 0.0)) {
        throw Error(ErrorCode::InvalidParameter,
                    "Omega must lie in [-2, 0), got " + std::to_string(scaled.omega));
    }
    if (!(scaled.tau >= 0.0)) {
        throw Error(ErrorCode::NegativeTime, "tau must be >= 0, got " + std::to_string(scaled.tau));
    }
}

ReferenceGadParams ReferenceGadParams::from_thermal(double n_th, double gamma0, double t) {
    if (!finite_all({n_th, gamma0, t}) || n_th < 0.0 || gamma0 < 0.0) {
        throw Error(ErrorCode::InvalidParameter, "need N_th >= 0 and gamma0 >= 0");
    }
    if (t < 0.0) {
        throw Error(ErrorCode::NegativeTime, "t must be >= 0");
    }
    ReferenceGadParams out;
    out.n_th = n_th;
    out.gamma0 = gamma0;
    out.lambda_t = -std::expm1(-gamma0 * (2.0 * n_th + 1.0) * t);
    out.p = (n_th + 1.0) / (2.0 * n_th + 1.0);
    return out;
}

ReferenceGadParams ReferenceGadParams::from_rates(const GadRates &rates, double t) {
    validate(rates);
    const double gamma0 = rates.y - rates.z;
    return from_thermal(rates.z / gamma0, gamma0, t);
}

ReferenceGadParams ReferenceGadParams::from_scaled(const GadScaled &scaled) {
    validate(scaled);
    const double omega = scaled.omega;
    ReferenceGadParams out = from_thermal((2.0 + omega) / (-2.0 * omega), -omega, scaled.tau);
    // Same quantities, written without the round trip through N_th.
    out.lambda_t = -std::expm1(-2.0 * scaled.tau);
    out.p = (2.0 - omega) / 4.0;
    return out;
}

GadScaled rescale(const GadRates &rates, double t) {
    validate(rates);
    if (!(t >= 0.0)) {
        throw Error(ErrorCode::NegativeTime, "t must be >= 0");
    }
    const double sum = rates.y + rates.z;
    return GadScaled{4.0 * rates.x / sum, -2.0 * (rates.y - rates.z) / sum, sum * t / 2.0};
}

LindbladGenerator gad_generator(const GadRates &rates) {
    validate(rates);
    return LindbladGenerator(pauli::z() * Complex(rates.x),
                             {{rates.y, pauli::lowering()}, {rates.z, pauli::raising()}});
}

SuperopMatrix gad_L(const GadRates &rates) {
    validate(rates);
    const double half = -(rates.y + rates.z) / 2.0;
    SuperopMatrix out;
    out.role = SuperopRole::Generator;
    auto &l = out.entries;
    l(1, 1) = half;
    l(1, 2) = -2.0 * rates.x;
    l(2, 1) = 2.0 * rates.x;
    l(2, 2) = half;
    l(3, 0) = rates.z - rates.y;
    l(3, 3) = -(rates.y + rates.z);
    return out;
}

SuperopMatrix gad_scaled_L(double theta, double omega) {
    SuperopMatrix out;
    out.role = SuperopRole::Generator;
    auto &l = out.entries;
    l(1, 1) = -1.0;
    l(1, 2) = -theta;
    l(2, 1) = theta;
    l(2, 2) = -1.0;
    l(3, 0) = omega;
    l(3, 3) = -2.0;
    return out;
}

SuperopMatrix gad_F_closed(const GadScaled &s) {
    validate(s);
    const double decay = std::exp(-s.tau);
    const double angle = s.theta * s.tau;
    SuperopMatrix out;
    out.role = SuperopRole::Propagator;
    out.time = s.tau;
    auto &f = out.entries;
    f(0, 0) = 1.0;
    f(1, 1) = decay * std::cos(angle);
    f(1, 2) = -decay * std::sin(angle);
    f(2, 1) = decay * std::sin(angle);
    f(2, 2) = decay * std::cos(angle);
    // e^{−τ}Ω sinh τ = Ω(1 − e^{−2τ})/2.
    f(3, 0) = -s.omega * std::expm1(-2.0 * s.tau) / 2.0;
    f(3, 3) = std::exp(-2.0 * s.tau);
    return out;
}

std::array<double, 4> gad_choi_eigenvalues(const GadScaled &s) {
    validate(s);
    const double q = -std::expm1(-2.0 * s.tau);
    const double em2 = std::exp(-2.0 * s.tau);
    const double omega2 = s.omega * s.omega;
    // e^{−2τ}·√(Ω² + e^{2τ}(16 + (−2 + e^{2τ})Ω²)) = √(16e^{−2τ} + Ω²q²).
    const double root = std::sqrt(16.0 * em2 + omega2 * q * q);
    const double outer = 2.0 * (1.0 + em2);
    return {q * (2.0 - s.omega) / 4.0, q * (2.0 + s.omega) / 4.0,
            q * q * (4.0 - omega2) / (outer + root) / 4.0, (outer + root) / 4.0};
}

GadIntermediates gad_intermediates(const GadScaled &s) {
    validate(s);
    const double tau = s.tau;
    const double angle = s.theta * tau;
    const double q = -std::expm1(-2.0 * tau);
    const double em2 = std::exp(-2.0 * tau);
    const double omega2 = s.omega * s.omega;
    const double root_scaled = std::sqrt(16.0 * em2 + omega2 * q * q);  // e^{−2τ}·R
    const double outer = 2.0 * (1.0 + em2);
    const double e2m1 = std::expm1(2.0 * tau);                         // e^{2τ} − 1
    const double root = std::exp(2.0 * tau) * root_scaled;               // R

    GadIntermediates out;
    out.a = Complex(s.omega * std::sinh(tau), -2.0 * std::sin(angle));
    out.b_plus = em2 * (outer + root_scaled);
    out.b_minus = em2 * q * q * (4.0 - omega2) / (outer + root_scaled);
    const double er = std::exp(tau) * root_scaled;  // e^{−τ}R
    out.c_plus = std::pow(er + 4.0 * std::cos(angle), 2);
    out.c_minus = std::pow(er - 4.0 * std::cos(angle), 2);
    out.d = 4.0 * std::exp(tau) * std::polar(1.0, -angle);
    const double drift = -s.omega * e2m1;  // (1 − e^{2τ})Ω ≥ 0
    out.e_plus = drift + root;
    // drift − R, rationalised: (drift² − R²) = −16e^{2τ}.
    out.e_minus = -16.0 * std::exp(2.0 * tau) / (drift + root);
    return out;
}

KrausSet gad_kraus_closed(const GadScaled &s) {
    validate(s);
    if (s.tau < kSingularTau) {
        throw Error(ErrorCode::SingularTime,
                    "closed-form GAD Kraus operators are singular at tau=" + std::to_string(s.tau));
    }
    const double q = -std::expm1(-2.0 * s.tau);
    const Complex i(0.0, 1.0);
    const QubitOperator e1 = lower_left(0.5 * i * std::sqrt(q * (2.0 - s.omega)));
    const QubitOperator e2 = upper_right(-0.5 * i * std::sqrt(q * (2.0 + s.omega)));

    const GadIntermediates m = gad_intermediates(s);
    const double a2 = std::norm(m.a);
    const Complex den = 2.0 * std::numbers::sqrt2 * m.a;
    const Complex pref3 = std::sqrt(a2 * m.b_minus / (4.0 * a2 + m.c_minus)) / den;
    const Complex pref4 = std::sqrt(a2 * m.b_plus / (4.0 * a2 + m.c_plus)) / den;
    const QubitOperator e3 = diag(pref3 * (m.d - m.e_plus), pref3 * (std::conj(m.d) + m.e_minus));
    const QubitOperator e4 = diag(pref4 * (m.d - m.e_minus), pref4 * (std::conj(m.d) + m.e_plus));
    return KrausSet({e1, e2, e3, e4});
}

KrausSet gad_kraus(const GadScaled &s) {
    validate(s);
    if (s.tau < kSingularTau) {
        return KrausSet::identity();
    }
    return gad_kraus_closed(s);
}

KrausSet gad_kraus_asymptotic(double omega) {
    validate(GadScaled{0.0, omega, 0.0});
    const Complex i(0.0, 1.0);
    const double lo = std::sqrt(2.0 - omega) / 2.0;
    const double hi = std::sqrt(2.0 + omega) / 2.0;
    return KrausSet({lower_left(i * lo), upper_right(-i * hi), diag(0.0, -lo), diag(hi, 0.0)});
}

KrausSet reference_gad_kraus(const ReferenceGadParams &params) {
    const double lambda = params.lambda_t;
    const double p = params.p;
    if (!(lambda >= 0.0 && lambda <= 1.0) || !(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "need lambda and p in [0, 1]");
    }
    const double sp = std::sqrt(p);
    const double sq = std::sqrt(1.0 - p);
    const double keep = std::sqrt(1.0 - lambda);
    const double jump = std::sqrt(lambda);
    return KrausSet({diag(sp * keep, sp), lower_left(sp * jump), diag(sq, sq * keep),
                     upper_right(sq * jump)});
}

KrausSet textbook_ad_kraus(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "need lambda in [0, 1]");
    }
    return KrausSet({diag(std::sqrt(1.0 - lambda), 1.0), lower_left(std::sqrt(lambda))});
}

GadRates rates_from_physics(const BathSpectrum &bath, std::optional<double> shift_override) {
    validate(bath);
    const double coupling = 2.0 * std::numbers::pi * spectral_density(bath, bath.omega0);
    const double nbar = thermal_occupation(bath.omega0, bath.temperature);
    GadRates rates;
    rates.y = coupling * (nbar + 1.0);
    rates.z = coupling * nbar;
    if (shift_override) {
        rates.x = *shift_override;
    } else {
        const LambStarkShift shift = lamb_stark_shift(bath);
        rates.x = shift.delta / 2.0 + shift.delta_prime;
    }
    validate(rates);
    return rates;
}

}  // namespace kraus_forge
