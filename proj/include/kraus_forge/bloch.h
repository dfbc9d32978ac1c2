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

#ifndef KRAUS_FORGE_BLOCH_H
#define KRAUS_FORGE_BLOCH_H

#include <cstddef>
#include <vector>

#include "kraus_forge/gad_channel.h"
#include "kraus_forge/kraus_pipeline.h"
#include "kraus_forge/linalg.h"

namespace kraus_forge {

/// A qubit channel acting on Bloch vectors, n ↦ M·n + b, where
/// M_ij = ½ tr(σ_i φ(σ_j)) and b_i = ½ tr(σ_i φ(I)).
struct AffineBlochMap {
    Mat3 linear = Mat3::identity();
    Vec3 shift{};

    Vec3 operator()(const Vec3 &n) const;
};

/// n_i = tr(σ_i ρ).
Vec3 bloch_vector(const QubitOperator &rho);
/// ½(I + n·σ).
QubitOperator density_from_bloch(const Vec3 &n);
/// (sin v cos u, sin v sin u, cos v).
Vec3 unit_bloch(double u, double v);

/// Throws IncompleteKrausSet if K is not complete within 1e-8.
AffineBlochMap bloch_map(const KrausSet &kraus);

/// Structure-of-arrays point cloud with the (u, v) each point came from.
struct PointCloud {
    std::vector<double> u, v, x, y, z;

    std::size_t size() const {
        return x.size();
    }
};

/// Image of the unit sphere sampled on u_i = 2πi/n_u (i < n_u) and
/// v_j = πj/(n_v − 1) (j < n_v). The poles v = 0 and v = π appear once each
/// (at u = 0); rows run over v, columns over u. Requires n_u, n_v ≥ 2.
PointCloud sample_ellipsoid(const AffineBlochMap &map, std::size_t n_u, std::size_t n_v);

struct EllipsoidShape {
    /// Singular values of M, descending.
    std::array<double, 3> semi_axes{};
    Vec3 center{};
};

EllipsoidShape ellipsoid_shape(const AffineBlochMap &map);

/// (4π/3)|det M|.
double map_volume(const AffineBlochMap &map);

/// (4π/3)e^{−4τ}.
double bloch_volume(const GadScaled &scaled);

/// V(t)/V(0) = e^{−2(y+z)t}.
double relative_volume(const GadRates &rates, double t);

/// κ(t) = (1/V0) dV/dt = −2(y+z)e^{−2(y+z)t}.
double volume_rate(const GadRates &rates, double t);

/// GAD image of the unit Bloch vector (u, v) in scaled variables.
Vec3 gad_bloch(const GadScaled &scaled, double u, double v);

/// Same solution written in the rates (x, y, z) and physical time t.
Vec3 gad_bloch_rates(const GadRates &rates, double t, double u, double v);

}  // namespace kraus_forge

#endif
