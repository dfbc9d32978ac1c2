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

#include "kraus_forge/bloch.h"

#include <numbers>
#include <string>

#include "kraus_forge/error.h"
#include "kraus_forge/simd.h"

namespace kraus_forge {

namespace {

constexpr double kCompleteness = 1e-8;
constexpr double kFourThirdsPi = 4.0 * std::numbers::pi / 3.0;

}  // namespace

Vec3 AffineBlochMap::operator()(const Vec3 &n) const {
    Vec3 out = apply(linear, n);
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] += shift[i];
    }
    return out;
}

Vec3 bloch_vector(const QubitOperator &rho) {
    const auto &s = pauli::xyz();
    return {trace(s[0] * rho).real(), trace(s[1] * rho).real(), trace(s[2] * rho).real()};
}

QubitOperator density_from_bloch(const Vec3 &n) {
    const auto &s = pauli::xyz();
    QubitOperator rho = QubitOperator::identity();
    for (std::size_t i = 0; i < 3; ++i) {
        rho += s[i] * Complex(n[i]);
    }
    return rho * Complex(0.5);
}

Vec3 unit_bloch(double u, double v) {
    return {std::sin(v) * std::cos(u), std::sin(v) * std::sin(u), std::cos(v)};
}

AffineBlochMap bloch_map(const KrausSet &kraus) {
    const double residual = kraus.completeness_residual();
    if (residual > kCompleteness) {
        throw Error(ErrorCode::IncompleteKrausSet,
                    "completeness residual " + std::to_string(residual));
    }
    const auto &s = pauli::xyz();
    AffineBlochMap out;
    const QubitOperator image_identity = apply_kraus(kraus, pauli::identity());
    for (std::size_t j = 0; j < 3; ++j) {
        const QubitOperator image = apply_kraus(kraus, s[j]);
        for (std::size_t i = 0; i < 3; ++i) {
            out.linear(i, j) = 0.5 * trace(s[i] * image).real();
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        out.shift[i] = 0.5 * trace(s[i] * image_identity).real();
    }
    return out;
}

PointCloud sample_ellipsoid(const AffineBlochMap &map, std::size_t n_u, std::size_t n_v) {
    if (n_u < 2 || n_v < 2) {
        throw Error(ErrorCode::InvalidParameter, "grid counts must be >= 2");
    }
    PointCloud cloud;
    const std::size_t count = n_u * (n_v - 2) + 2;
    for (auto *c : {&cloud.u, &cloud.v, &cloud.x, &cloud.y, &cloud.z}) {
        c->reserve(count);
    }
    const auto push = [&](double u, double v) {
        const Vec3 n = unit_bloch(u, v);
        cloud.u.push_back(u);
        cloud.v.push_back(v);
        cloud.x.push_back(n[0]);
        cloud.y.push_back(n[1]);
        cloud.z.push_back(n[2]);
    };
    for (std::size_t j = 0; j < n_v; ++j) {
        const double v = std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_v - 1);
        if (j == 0 || j + 1 == n_v) {
            push(0.0, v);
            continue;
        }
        for (std::size_t i = 0; i < n_u; ++i) {
            push(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_u), v);
        }
    }
    simd::affine3(map.linear, map.shift, cloud.x, cloud.y, cloud.z, cloud.x, cloud.y, cloud.z);
    return cloud;
}

EllipsoidShape ellipsoid_shape(const AffineBlochMap &map) {
    const Mat3 gram = map.linear * adjoint(map.linear);
    CMatrix<3> g{};
    for (std::size_t k = 0; k < 9; ++k) {
        g.data[k] = gram.data[k];
    }
    const auto eig = hermitian_eig(g);
    EllipsoidShape out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.semi_axes[i] = std::sqrt(std::max(eig.values[i], 0.0));
    }
    out.center = map.shift;
    return out;
}

double map_volume(const AffineBlochMap &map) {
    return kFourThirdsPi * std::abs(determinant(map.linear));
}

double bloch_volume(const GadScaled &scaled) {
    validate(scaled);
    return kFourThirdsPi * std::exp(-4.0 * scaled.tau);
}

double relative_volume(const GadRates &rates, double t) {
    validate(rates);
    if (!(t >= 0.0)) {
        throw Error(ErrorCode::NegativeTime, "t must be >= 0");
    }
    return std::exp(-2.0 * (rates.y + rates.z) * t);
}

double volume_rate(const GadRates &rates, double t) {
    const double sum = rates.y + rates.z;
    return -2.0 * sum * relative_volume(rates, t);
}

Vec3 gad_bloch(const GadScaled &s, double u, double v) {
    validate(s);
    const double decay = std::exp(-s.tau);
    const double em2 = std::exp(-2.0 * s.tau);
    return {decay * std::sin(v) * std::cos(u + s.theta * s.tau),
            decay * std::sin(v) * std::sin(u + s.theta * s.tau),
            -s.omega / 2.0 * std::expm1(-2.0 * s.tau) + em2 * std::cos(v)};
}

Vec3 gad_bloch_rates(const GadRates &r, double t, double u, double v) {
    validate(r);
    if (!(t >= 0.0)) {
        throw Error(ErrorCode::NegativeTime, "t must be >= 0");
    }
    const double sum = r.y + r.z;
    const double decay = std::exp(-0.5 * t * sum);
    const double em = std::exp(-t * sum);
    return {decay * std::cos(u + 2.0 * t * r.x) * std::sin(v),
            decay * std::sin(v) * std::sin(u + 2.0 * t * r.x),
            (sum * em * std::cos(v) - (r.y - r.z) * (1.0 - em)) / sum};
}

}  // namespace kraus_forge
