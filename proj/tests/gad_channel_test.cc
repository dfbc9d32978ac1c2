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

#include <functional>

#include <gtest/gtest.h>

#include "kraus_forge/error.h"
#include "kraus_forge/gad_channel.h"
#include "test_util.h"

namespace kraus_forge {
namespace {

using testing::random_density;
using testing::uniform;

constexpr double kThetas[] = {0.0, 1.0, 5.0};
constexpr double kOmegas[] = {-2.0, -1.0, -0.1};
constexpr double kTaus[] = {0.1, 0.5, 1.0, 2.0, 5.0};

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no kraus_forge::Error thrown";
    return ErrorCode::InvalidParameter;
}

std::array<double, 4> sorted(std::array<double, 4> a) {
    std::sort(a.begin(), a.end());
    return a;
}

double bloch_z(const QubitOperator &rho) {
    return (rho(0, 0) - rho(1, 1)).real();
}

TEST(GadRates, Rescale) {
    const GadScaled s = rescale(GadRates{1.0, 3.0, 1.0}, 0.5);
    EXPECT_DOUBLE_EQ(s.theta, 1.0);
    EXPECT_DOUBLE_EQ(s.omega, -1.0);
    EXPECT_DOUBLE_EQ(s.tau, 1.0);
}

TEST(GadRates, Validation) {
    EXPECT_EQ(code_of([] { validate(GadRates{0.0, 1.0, 1.0}); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([] { validate(GadRates{0.0, 1.0, -0.1}); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([] { validate(GadScaled{0.0, 0.0, 1.0}); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([] { validate(GadScaled{0.0, -2.5, 1.0}); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([] { validate(GadScaled{0.0, -1.0, -1.0}); }), ErrorCode::NegativeTime);
    EXPECT_EQ(code_of([] { gad_L(GadRates{0.0, 1.0, 2.0}); }), ErrorCode::InvalidParameter);
}

TEST(GadGenerator, ScaledLIsRescaledL) {
    for (int rep = 0; rep < 50; ++rep) {
        const double z = uniform(0.0, 2.0);
        const GadRates r{uniform(-3.0, 3.0), z + uniform(0.05, 2.0), z};
        const GadScaled s = rescale(r, 1.0);
        const RMatrix<4> want = gad_L(r).entries * (2.0 / (r.y + r.z));
        EXPECT_LT(max_abs_diff(gad_scaled_L(s.theta, s.omega).entries, want), 1e-14);
    }
}

TEST(GadPropagator, PhysicalTimeMatchesScaledClosedForm) {
    const SuperopMatrix f = propagate(gad_L(GadRates{1.0, 3.0, 1.0}), 0.5);
    EXPECT_LT(max_abs_diff(f.entries, gad_F_closed(GadScaled{1.0, -1.0, 1.0}).entries), 1e-10);
}

TEST(GadPropagator, ClosedFormMatchesMatrixExpOnGrid) {
    for (double theta : kThetas) {
        for (double omega : kOmegas) {
            for (double tau : kTaus) {
                const GadScaled s{theta, omega, tau};
                const auto numeric = propagate(gad_scaled_L(theta, omega), tau);
                EXPECT_LT(max_abs_diff(gad_F_closed(s).entries, numeric.entries), 1e-10)
                    << theta << " " << omega << " " << tau;
            }
        }
    }
}

TEST(GadPropagator, AmplitudeDampingEntries) {
    const double tau = 0.8;
    const auto f = gad_F_closed(GadScaled{0.0, -2.0, tau}).entries;
    EXPECT_NEAR(f(1, 1), std::exp(-tau), 1e-15);
    EXPECT_NEAR(f(2, 2), std::exp(-tau), 1e-15);
    EXPECT_NEAR(f(3, 3), std::exp(-2 * tau), 1e-15);
    EXPECT_NEAR(f(3, 0), std::exp(-2 * tau) - 1.0, 1e-15);
    EXPECT_EQ(f(1, 2), 0.0);
    EXPECT_EQ(f(0, 0), 1.0);
}

TEST(GadChoiSpectrum, FrozenOrderAtReferencePoint) {
    // q = 1 − e^{−2}; order q(2−Ω)/4, q(2+Ω)/4, small root, large root.
    const auto ev = gad_choi_eigenvalues(GadScaled{1.0, -1.0, 1.0});
    EXPECT_NEAR(ev[0], 0.6484985375725405, 1e-15);
    EXPECT_NEAR(ev[1], 0.21616617919084685, 1e-15);
    EXPECT_NEAR(ev[2], 0.14097911322484, 1e-13);
    EXPECT_NEAR(ev[3], 0.9943561700117728, 1e-15);
}

TEST(GadChoiSpectrum, SpecialPoints) {
    const auto ln2 = gad_choi_eigenvalues(GadScaled{0.0, -2.0, std::log(2.0)});
    EXPECT_NEAR(ln2[0], 0.75, 1e-15);
    EXPECT_NEAR(ln2[1], 0.0, 1e-15);
    EXPECT_NEAR(ln2[2], 0.0, 1e-15);
    EXPECT_NEAR(ln2[3], 1.25, 1e-15);
    for (double omega : kOmegas) {
        const auto inf = gad_choi_eigenvalues(GadScaled{0.0, omega, 40.0});
        EXPECT_NEAR(inf[0], (2 - omega) / 4, 1e-15);
        EXPECT_NEAR(inf[1], (2 + omega) / 4, 1e-15);
        EXPECT_NEAR(inf[2], (2 + omega) / 4, 1e-15);
        EXPECT_NEAR(inf[3], (2 - omega) / 4, 1e-15);
    }
    const auto theta0 = gad_choi_eigenvalues(GadScaled{0.0, -2.0, 0.3});
    EXPECT_NEAR(theta0[3], 1 + std::exp(-0.6), 1e-15);
    EXPECT_NEAR(theta0[0], 1 - std::exp(-0.6), 1e-15);
}

TEST(GadChoiSpectrum, SmallRootWithoutCancellation) {
    // mpmath at 50 digits.
    const auto a = gad_choi_eigenvalues(GadScaled{0.0, -1.0, 1e-6});
    EXPECT_NEAR(a[2] / 3.7499962500019531e-13, 1.0, 1e-12);
    EXPECT_NEAR(a[0] / 1.499998500001e-6, 1.0, 1e-12);
    const auto b = gad_choi_eigenvalues(GadScaled{0.0, -0.1, 1e-3});
    EXPECT_NEAR(b[2] / 4.982515405014482e-7, 1.0, 1e-12);
    EXPECT_NEAR(b[0] / 0.00104895069965014, 1.0, 1e-12);
    EXPECT_EQ(gad_choi_eigenvalues(GadScaled{0.0, -2.0, 1e-7})[2], 0.0);
}

TEST(GadChoiSpectrum, MatchesPipelineAndSumsToTwo) {
    for (double theta : kThetas) {
        for (double omega : kOmegas) {
            for (double tau : kTaus) {
                const GadScaled s{theta, omega, tau};
                const ChoiMatrix choi = choi_from_propagator(
                    propagate(gad_scaled_L(theta, omega), tau), HermitianBasis::pauli());
                const auto want = sorted(gad_choi_eigenvalues(s));
                const auto got = sorted(choi.eigenvalues());
                double sum = 0.0;
                for (std::size_t i = 0; i < 4; ++i) {
                    EXPECT_NEAR(got[i], want[i], 1e-10);
                    sum += want[i];
                }
                EXPECT_NEAR(sum, 2.0, 1e-12);
            }
        }
    }
    for (int rep = 0; rep < 100; ++rep) {
        const auto ev = gad_choi_eigenvalues(GadScaled{0.0, uniform(-2.0, -1e-3), uniform(0.0, 30.0)});
        EXPECT_NEAR(ev[0] + ev[1] + ev[2] + ev[3], 2.0, 1e-14);
    }
}

TEST(GadKraus, ClosedFormAtReferencePoint) {
    const GadScaled s{1.0, -1.0, 1.0};
    const KrausSet closed = gad_kraus_closed(s);
    ASSERT_EQ(closed.size(), 4u);
    EXPECT_LT(closed.completeness_residual(), 1e-9);
    EXPECT_LT(choi_distance(closed, derive_kraus(gad_scaled_L(1.0, -1.0), 1.0)), 1e-9);
}

TEST(GadKraus, ClosedFormMatchesPipelineOnGrid) {
    for (double theta : kThetas) {
        for (double omega : kOmegas) {
            const SuperopMatrix l = gad_scaled_L(theta, omega);
            for (double tau : {1e-6, 1e-4, 0.1, 0.5, 1.0, 2.0, 5.0, 12.0}) {
                const KrausSet closed = gad_kraus_closed(GadScaled{theta, omega, tau});
                EXPECT_LT(closed.completeness_residual(), 1e-12) << omega << " " << tau;
                EXPECT_LT(choi_distance(closed, derive_kraus(l, tau)), 1e-9)
                    << theta << " " << omega << " " << tau;
            }
        }
    }
}

TEST(GadKraus, WeightsAreTheChoiSpectrum) {
    const GadScaled s{5.0, -0.1, 2.0};
    const KrausSet closed = gad_kraus_closed(s);
    const auto ev = gad_choi_eigenvalues(s);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(closed.weights()[i], ev[i], 1e-14);
    }
}

TEST(GadKraus, ZeroTime) {
    EXPECT_EQ(code_of([] { gad_kraus_closed(GadScaled{0.0, -1.0, 0.0}); }), ErrorCode::SingularTime);
    const KrausSet k = gad_kraus(GadScaled{1.0, -1.0, 0.0});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], pauli::identity());
    const KrausSet p = derive_kraus(gad_scaled_L(1.0, -1.0), 0.0);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_LT(max_abs_diff(p[0], pauli::identity()), 1e-15);
}

TEST(GadKraus, AmplitudeDampingHasTwoOperators) {
    const KrausSet k = gad_kraus(GadScaled{0.0, -2.0, std::log(2.0)});
    const KrausSet kept = k.pruned(1e-12);
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(frobenius_norm(k[1]), 0.0);
    EXPECT_LT(frobenius_norm(k[2]), 1e-12);
    // |0⟩⟨0| with e^{−τ} = 1/2 goes to diag(1/4, 3/4).
    QubitOperator excited{};
    excited(0, 0) = 1.0;
    const QubitOperator out = apply_channel(kept, excited);
    EXPECT_NEAR(out(0, 0).real(), 0.25, 1e-15);
    EXPECT_NEAR(out(1, 1).real(), 0.75, 1e-15);
    EXPECT_NEAR(std::abs(out(0, 1)), 0.0, 1e-15);
}

TEST(GadKraus, AsymptoticLimit) {
    for (double theta : kThetas) {
        for (double omega : kOmegas) {
            const KrausSet late = gad_kraus_closed(GadScaled{theta, omega, 20.0});
            const KrausSet limit = gad_kraus_asymptotic(omega);
            EXPECT_LT(limit.completeness_residual(), 1e-15);
            EXPECT_LT(choi_distance(late, limit), 1e-7);
            EXPECT_LT(choi_distance(derive_kraus(gad_scaled_L(theta, omega), 20.0), limit), 1e-7);
            for (int rep = 0; rep < 5; ++rep) {
                EXPECT_NEAR(bloch_z(apply_channel(limit, random_density())), omega / 2, 1e-15);
            }
        }
    }
}

TEST(GadReference, PomegaBridge) {
    // Ω = −2/(2N+1) and p = (N+1)/(2N+1) give p = (2−Ω)/4.
    for (double n : {0.0, 0.3, 4.5, 100.0}) {
        const double omega = -2.0 / (2 * n + 1);
        const auto ref = ReferenceGadParams::from_scaled(GadScaled{0.0, omega, 1.0});
        EXPECT_NEAR(ref.p, (n + 1) / (2 * n + 1), 1e-15);
        EXPECT_NEAR(ref.n_th, n, 1e-12 * std::max(1.0, n));
        EXPECT_NEAR(ref.lambda_t, 1 - std::exp(-2.0), 1e-15);
    }
    const GadRates rates{0.0, 2.5, 0.5};
    const auto a = ReferenceGadParams::from_rates(rates, 0.7);
    const auto b = ReferenceGadParams::from_scaled(rescale(rates, 0.7));
    EXPECT_NEAR(a.p, b.p, 1e-15);
    EXPECT_NEAR(a.lambda_t, b.lambda_t, 1e-15);
    const auto c = ReferenceGadParams::from_thermal(a.n_th, a.gamma0, 0.7);
    EXPECT_NEAR(a.lambda_t, c.lambda_t, 1e-15);
    EXPECT_NEAR(a.p, c.p, 1e-15);
}

TEST(GadReference, EquivalentToClosedFormSet) {
    for (double theta : kThetas) {
        for (double omega : kOmegas) {
            for (double tau : kTaus) {
                const GadScaled s{theta, omega, tau};
                KrausSet ref = reference_gad_kraus(ReferenceGadParams::from_scaled(s));
                EXPECT_LT(ref.completeness_residual(), 1e-14);
                if (theta != 0.0) {
                    ref = ref.left_multiplied(z_rotation(theta * tau));
                }
                EXPECT_LT(choi_distance(ref, gad_kraus_closed(s)), 1e-9);
                EXPECT_LT(choi_distance(ref, derive_kraus(gad_scaled_L(theta, omega), tau)), 1e-9);
            }
        }
    }
}

TEST(GadReference, TextbookAmplitudeDamping) {
    for (double tau : kTaus) {
        const double lambda = -std::expm1(-2 * tau);
        const KrausSet textbook = textbook_ad_kraus(lambda);
        EXPECT_LT(textbook.completeness_residual(), 1e-15);
        EXPECT_LT(choi_distance(gad_kraus_closed(GadScaled{0.0, -2.0, tau}), textbook), 1e-10);

        // The same pair with the excited state labelled |1⟩ is the σx conjugate.
        QubitOperator e0{};
        e0(0, 0) = 1.0;
        e0(1, 1) = std::sqrt(1 - lambda);
        QubitOperator e1{};
        e1(0, 1) = std::sqrt(lambda);
        const QubitOperator x = pauli::x();
        EXPECT_LT(max_abs_diff(x * e0 * x, textbook[0]), 1e-15);
        EXPECT_LT(max_abs_diff(x * e1 * x, textbook[1]), 1e-15);
        EXPECT_GT(choi_distance(KrausSet({e0, e1}), textbook), 0.1);
    }
}

TEST(GadPhysics, ZeroTemperatureRates) {
    BathSpectrum bath;
    const GadRates r = rates_from_physics(bath, 0.0);
    EXPECT_EQ(r.z, 0.0);
    EXPECT_NEAR(spectral_density(bath, 10.0), 0.2 * std::exp(-2.0 / 3.0), 1e-15);
    EXPECT_NEAR(r.y, 0.645178979752011, 1e-14);
    EXPECT_EQ(r.x, 0.0);
}

TEST(GadPhysics, ThermalRates) {
    struct Case {
        double temperature, n, y, z, omega;
    };
    // numpy oracle: n̄ = 1/expm1(ω0/T), y = 2πJ(n̄+1), z = 2πJn̄.
    const Case cases[] = {
        {100.0, 9.50833194477505, 6.779754883025432, 6.134575903273421, -0.0999167499157599},
        {300.0, 29.502777726338806, 19.679751013081635, 19.034572033329624, -0.03333024725647721},
        {1.0, 4.5401991009687765e-05, 0.6452082721622493, 2.9292410238340328e-05,
         -1.9998184085251904},
    };
    for (const Case &c : cases) {
        BathSpectrum bath;
        bath.temperature = c.temperature;
        EXPECT_NEAR(thermal_occupation(10.0, c.temperature) / c.n, 1.0, 1e-13);
        const GadRates r = rates_from_physics(bath, 0.25);
        EXPECT_NEAR(r.y / c.y, 1.0, 1e-13);
        EXPECT_NEAR(r.z / c.z, 1.0, 1e-13);
        EXPECT_EQ(r.x, 0.25);
        EXPECT_NEAR(rescale(r, 1.0).omega, c.omega, 1e-13);
    }
}

}  // namespace
}  // namespace kraus_forge
