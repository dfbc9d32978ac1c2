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

#include <cstdlib>
#include <cstring>
#include <algorithm>

#include <gtest/gtest.h>

#include "kraus_forge/error.h"
#include "kraus_forge/simd.h"
#include "test_util.h"

namespace kraus_forge {
namespace {

using testing::uniform;

struct Cloud {
    std::vector<double> x, y, z;
};

Cloud random_cloud(std::size_t n) {
    Cloud c;
    for (std::size_t k = 0; k < n; ++k) {
        c.x.push_back(uniform(-1.0, 1.0));
        c.y.push_back(uniform(-1.0, 1.0));
        c.z.push_back(uniform(-1.0, 1.0));
    }
    return c;
}

Mat3 random_mat3() {
    Mat3 m;
    for (auto &v : m.data) {
        v = uniform(-1.0, 1.0);
    }
    return m;
}

bool bitwise_equal(const std::vector<double> &a, const std::vector<double> &b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

TEST(Simd, ScalarAlwaysAvailable) {
    const auto isas = simd::available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), simd::Isa::Scalar);
    EXPECT_EQ(simd::isa_name(simd::Isa::Avx2), "avx2");
}

TEST(Simd, AffineMatchesScalarBitwise) {
    // Odd lengths exercise the vector tails.
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 266u, 1001u}) {
        const Cloud c = random_cloud(n);
        const Mat3 m = random_mat3();
        const Vec3 b{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
        Cloud ref{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
        simd::affine3(simd::Isa::Scalar, m, b, c.x, c.y, c.z, ref.x, ref.y, ref.z);
        for (std::size_t k = 0; k < n; ++k) {
            const Vec3 want = kraus_forge::apply(m, Vec3{c.x[k], c.y[k], c.z[k]});
            EXPECT_NEAR(ref.x[k], want[0] + b[0], 1e-15);
            EXPECT_NEAR(ref.z[k], want[2] + b[2], 1e-15);
        }
        for (simd::Isa isa : simd::available_isas()) {
            Cloud out{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
            simd::affine3(isa, m, b, c.x, c.y, c.z, out.x, out.y, out.z);
            EXPECT_TRUE(bitwise_equal(out.x, ref.x)) << simd::isa_name(isa) << " n=" << n;
            EXPECT_TRUE(bitwise_equal(out.y, ref.y)) << simd::isa_name(isa) << " n=" << n;
            EXPECT_TRUE(bitwise_equal(out.z, ref.z)) << simd::isa_name(isa) << " n=" << n;

            Cloud in_place = c;
            simd::affine3(isa, m, b, in_place.x, in_place.y, in_place.z, in_place.x, in_place.y,
                          in_place.z);
            EXPECT_TRUE(bitwise_equal(in_place.x, ref.x));
            EXPECT_TRUE(bitwise_equal(in_place.z, ref.z));
        }
    }
}

TEST(Simd, MaxDistanceMatchesScalarBitwise) {
    for (std::size_t n : {0u, 1u, 2u, 7u, 64u, 999u}) {
        const Cloud c = random_cloud(n);
        const Vec3 center{0.1, -0.2, 0.3};
        const double ref = simd::max_distance_sq(simd::Isa::Scalar, c.x, c.y, c.z, center);
        double brute = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double dx = c.x[k] - center[0];
            const double dy = c.y[k] - center[1];
            const double dz = c.z[k] - center[2];
            brute = std::max(brute, dx * dx + dy * dy + dz * dz);
        }
        EXPECT_EQ(ref, brute);
        for (simd::Isa isa : simd::available_isas()) {
            EXPECT_EQ(simd::max_distance_sq(isa, c.x, c.y, c.z, center), ref) << simd::isa_name(isa);
        }
    }
}

TEST(Simd, DispatchHonorsEnvironment) {
    ::setenv("KRAUS_FORGE_ISA", "scalar", 1);
    EXPECT_EQ(simd::active_isa(), simd::Isa::Scalar);
    ::unsetenv("KRAUS_FORGE_ISA");
    EXPECT_EQ(simd::active_isa(), simd::available_isas().back());
}

TEST(Simd, RejectsBadArguments) {
    std::vector<double> a(4), b(3);
    EXPECT_THROW(simd::affine3(simd::Isa::Scalar, Mat3::identity(), Vec3{}, a, a, b, a, a, a), Error);
    const auto isas = simd::available_isas();
    for (simd::Isa isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
        if (std::find(isas.begin(), isas.end(), isa) == isas.end()) {
            EXPECT_THROW(simd::max_distance_sq(isa, a, a, a, Vec3{}), Error);
        }
    }
}

}  // namespace
}  // namespace kraus_forge
