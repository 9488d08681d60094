// Copyright 2026 The qinflate Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qinflate/states.hpp"

using namespace qinflate;

TEST(PureState, NormIsChecked) {
    CVec v = CVec::Zero(2);
    v(0) = 0.9;
    EXPECT_QERROR(PureState(SubsystemLayout::uniform(1, 2), v), InvalidState);
    EXPECT_QERROR(PureState(SubsystemLayout::uniform(2, 2), CVec::Zero(2)), DimensionError);
}

TEST(Distribution, ClampsTinyNegativesOnly) {
    const auto l = SubsystemLayout::uniform(1, 2);
    Distribution d(l, {1.0 + 5e-13, -5e-13});
    EXPECT_EQ(d.probs()[1], 0.0);
    EXPECT_QERROR(Distribution(l, {1.1, -0.1}), InvalidState);
    EXPECT_QERROR(Distribution(l, {0.5, 0.4}), InvalidState);
}

TEST(Distribution, MarginalSumsOut) {
    std::mt19937_64 rng(3);
    auto p = random_distribution(SubsystemLayout({"A", "B", "C"}, {2, 3, 2}), rng);
    auto m = p.marginal({"A", "C"});
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t c = 0; c < 2; ++c) {
            double s = 0.0;
            for (std::size_t b = 0; b < 3; ++b) {
                s += p.at({a, b, c});
            }
            EXPECT_NEAR(m.at({a, c}), s, 1e-15);
        }
    }
}

TEST(Named, GhzAndW) {
    const auto g = ghz_state().amplitudes();
    EXPECT_NEAR(std::abs(g(0)), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(g(7)), 1.0 / std::sqrt(2.0), 1e-15);
    const auto w = w_state().amplitudes();
    for (int i : {1, 2, 4}) {
        EXPECT_NEAR(std::abs(w(i)), 1.0 / std::sqrt(3.0), 1e-15);
    }
    EXPECT_EQ(ghz_distn().at({1, 1, 1}), 0.5);
    EXPECT_NEAR(w_distn().at({0, 1, 0}), 1.0 / 3.0, 1e-15);
    auto enc = encode_distribution(w_distn());
    EXPECT_NEAR(enc.matrix()(4, 4).real(), 1.0 / 3.0, 1e-15);
}

TEST(TriBell, DomainAndParametrisation) {
    EXPECT_QERROR(tri_bell(2.9), DomainError);
    EXPECT_QERROR(tri_bell_t_from_amplitude(0.5), DomainError);
    EXPECT_QERROR(tri_bell_t_from_amplitude(1.0), DomainError);
    // t = 3 is the W state.
    EXPECT_LT((tri_bell(3.0).amplitudes() - w_state().amplitudes()).norm(), 1e-15);
    for (double a : {0.6, 0.7, 0.8, 0.9, 0.95}) {
        const double t = tri_bell_t_from_amplitude(a);
        EXPECT_NEAR(std::sqrt((t - 2.0) / t), a, 1e-14);
        EXPECT_LT((tri_bell(t).amplitudes() - tri_bell_amplitude(a).amplitudes()).norm(), 1e-14);
        EXPECT_EQ(tri_bell_amplitude(a).amplitudes()(4).real(), a);
    }
}

TEST(Omega, IsValidMixture) {
    auto o = omega_example();
    EXPECT_NEAR(o.matrix().trace().real(), 1.0, 1e-14);
    EXPECT_GT(oracle::min_eig(o.matrix()), -1e-14);
    // Rank 2: two pure components.
    auto ev = oracle::eigenvalues(o.matrix());
    int nonzero = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        nonzero += ev(i) > 1e-10 ? 1 : 0;
    }
    EXPECT_EQ(nonzero, 2);
}

TEST(WhiteNoise, EndpointsAndDomain) {
    auto full = white_noise_mixture(ghz_state(), 1.0);
    EXPECT_LT(max_abs_diff(full.matrix(), ghz_state().density().matrix()), 1e-15);
    auto none = white_noise_mixture(w_state(), 0.0);
    EXPECT_LT(max_abs_diff(none.matrix(), CMat::Identity(8, 8) / 8.0), 1e-15);
    EXPECT_QERROR(white_noise_mixture(ghz_state(), 1.2), DomainError);
}

TEST(TothAcin, PauliCoefficients) {
    // Tr[(s_i s_j s_k) rho] * 1/8 recovers each Pauli coefficient.
    CMat s[4];
    s[0] = CMat::Identity(2, 2);
    s[1] = CMat::Zero(2, 2);
    s[1](0, 1) = s[1](1, 0) = 1.0;
    s[2] = CMat::Zero(2, 2);
    s[2](0, 1) = cplx(0, -1);
    s[2](1, 0) = cplx(0, 1);
    s[3] = CMat::Zero(2, 2);
    s[3](0, 0) = 1.0;
    s[3](1, 1) = -1.0;
    const double c = 0.37;
    auto op = toth_acin_operator(c);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                const CMat p = kron(kron(s[i], s[j]), s[k]);
                const double coeff = (p * op.matrix()).trace().real() / 8.0;
                double expected = 0.0;
                if (i == 0 && j == 0 && k == 0) expected = 1.0 / 8.0;
                if (i == 0 && j == k && j > 0) expected = 1.0 / 24.0;
                if (j == 0 && i == k && i > 0) expected = -c / 16.0;
                if (k == 0 && i == j && i > 0) expected = -c / 16.0;
                EXPECT_NEAR(coeff, expected, 1e-15) << i << j << k;
            }
        }
    }
}

TEST(TothAcin, ZeroFactorisesAndPsdCheck) {
    auto rho = toth_acin(0.0);
    auto bc = partial_trace(rho.op(), {"B", "C"});
    EXPECT_LT(max_abs_diff(rho.matrix(), kron(CMat::Identity(2, 2) / 2.0, bc.matrix())), 1e-15);
    EXPECT_NO_THROW(toth_acin(1.0));
    EXPECT_QERROR(toth_acin(-1.0), InvalidParameter);
}

TEST(Qutrit, ComponentsAndTwirl) {
    for (int i = 0; i < 3; ++i) {
        const CVec a = qutrit_component(i).amplitudes();
        int nz = 0;
        for (Eigen::Index k = 0; k < a.size(); ++k) {
            if (std::abs(a(k)) > 0) {
                ++nz;
                EXPECT_NEAR(a(k).real(), 1.0 / 3.0, 1e-15);
            }
        }
        EXPECT_EQ(nz, 9);
    }
    auto [pure, mixed] = qutrit_pair(0.5, 0.25);
    auto tw = z3_twirl(pure.density().op());
    EXPECT_LT(max_abs_diff(tw.matrix(), mixed.matrix()), 1e-10);
    auto [p1, m1] = qutrit_pair(1.0, 0.0);
    EXPECT_LT((p1.amplitudes() - qutrit_component(0).amplitudes()).norm(), 1e-15);
    EXPECT_QERROR(qutrit_pair(0.7, 0.6), DomainError);
}

TEST(Schmidt224, BasisStateAndConditions) {
    auto psi = schmidt224({1, 0, 0, 0, 0, 0, 0, 0}, 0.0, 0.0);
    EXPECT_NEAR(psi.amplitudes()(0).real(), 1.0, 1e-15);
    EXPECT_QERROR(schmidt224({0.5, 0.5, 0.5, 0.5, 0.1, 0, 0, 0}, 0, 0), ConstraintViolated);
    // |alpha_0| < |alpha_5| violates the ordering condition.
    const double s = 1.0 / std::sqrt(2.0);
    try {
        schmidt224({0.1, 0, 0, 0, 0, std::sqrt(1 - 0.01), 0, 0}, 0, 0);
        ADD_FAILURE();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ConstraintViolated);
        EXPECT_NE(std::string(e.what()).find("condition 5"), std::string::npos);
    }
    EXPECT_NO_THROW(schmidt224({0.1, 0, 0, 0, 0, std::sqrt(1 - 0.01), 0, 0}, 0, 0, {false}));
    CVec bad = CVec::Zero(16);
    bad(0) = s;
    bad(1) = s;
    try {
        check_schmidt224_form(PureState(SubsystemLayout({"A", "B", "C"}, {2, 2, 4}), bad));
        ADD_FAILURE();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("condition 1"), std::string::npos);
    }
}

TEST(MeasureLocal, ComputationalBasisIsDiagonal) {
    std::mt19937_64 rng(5);
    auto rho = random_density_matrix(SubsystemLayout::uniform(3, 2), rng);
    auto p = measure_local(rho, LocalBasis::computational(rho.layout()));
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(p.probs()[i], rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real(),
                    1e-15);
    }
    CMat notu = CMat::Identity(2, 2) * 2.0;
    EXPECT_QERROR(LocalBasis({notu}), InvalidParameter);
}

TEST(NuDecomposition, PartsAreOrthogonalAndPositive) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        auto rho = random_density_matrix(SubsystemLayout::uniform(3, 2), rng);
        auto nu = nu_decomposition(rho, "A", "C");
        auto d = product_defect(rho, "A", "C");
        EXPECT_LT(max_abs_diff((nu.nu_plus - nu.nu_minus).matrix(), d.matrix()), 1e-12);
        EXPECT_GT(oracle::min_eig(nu.nu_plus.matrix()), -1e-12);
        EXPECT_GT(oracle::min_eig(nu.nu_minus.matrix()), -1e-12);
        EXPECT_LT((nu.nu_plus.matrix() * nu.nu_minus.matrix()).cwiseAbs().maxCoeff(), 1e-10);
        // Traceless difference, so the parts carry equal weight.
        EXPECT_NEAR(nu.nu_plus.trace(), nu.nu_minus.trace(), 1e-12);
    }
}

// Property: a product defect that is nonzero always has a negative eigenvalue,
// because it is traceless.
TEST(ProductDefect, NonzeroImpliesNegativeEigenvalue) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto rho = random_density_matrix(SubsystemLayout({"A", "B", "C"}, {2, 3, 2}), rng);
        auto d = product_defect(rho, "B", "C");
        EXPECT_NEAR(d.trace(), 0.0, 1e-12);
        if (d.matrix().norm() > 1e-8) {
            EXPECT_LT(oracle::min_eig(d.matrix()), 0.0);
        }
    }
}

TEST(Biseparable, DetectsProductsAndEntangled) {
    CVec zero(2), plus(2);
    zero << 1.0, 0.0;
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CVec bell = CVec::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    // A | BC with BC entangled.
    PureState s(SubsystemLayout::uniform(3, 2), kron(plus, bell));
    auto b = is_biseparable_pure(s);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->first, (std::set<std::string>{"A"}));
    EXPECT_FALSE(is_biseparable_pure(ghz_state()).has_value());
    EXPECT_FALSE(is_biseparable_pure(w_state()).has_value());
    PureState prod(SubsystemLayout::uniform(3, 2), kron(kron(zero, plus), zero));
    EXPECT_TRUE(is_biseparable_pure(prod).has_value());
}

TEST(Random, SamplersAreValidAndSeeded) {
    std::mt19937_64 a(42), b(42);
    const auto l = SubsystemLayout({"A", "B", "C"}, {3, 2, 3});
    auto ra = random_density_matrix(l, a);
    auto rb = random_density_matrix(l, b);
    EXPECT_EQ(ra.matrix(), rb.matrix());
    EXPECT_NEAR(ra.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GT(oracle::min_eig(ra.matrix()), -1e-12);
    auto p = random_pure_state(l, a);
    EXPECT_NEAR(p.amplitudes().norm(), 1.0, 1e-12);
}
