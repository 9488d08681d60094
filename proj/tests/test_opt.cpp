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

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "qinflate/opt.hpp"
#include "qinflate/witness.hpp"

using namespace qinflate;

namespace {

WitnessOperator tri_bell_ab(double a) { return cut_witness_quantum(tri_bell_amplitude(a).density(), Cut{"A", "B"}); }

void expect_ppt_feasible(const DensityMatrix &rho, double tol) {
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, tol);
    EXPECT_GE(oracle::min_eig(rho.matrix()), -tol);
    const std::vector<std::size_t> dims(rho.layout().dims().begin(), rho.layout().dims().end());
    for (std::size_t k = 0; k < dims.size(); ++k) {
        EXPECT_GE(oracle::min_eig(oracle::partial_transpose(rho.matrix(), dims, k)), -tol);
    }
}

} // namespace

// Frozen from tests/reference/ppt_reference.py (cvxpy/SCS at eps 1e-9).
struct PptCase {
    const char *name;
    double amplitude; // 0 selects GHZ
    double ppt;
};

class PptReference : public ::testing::TestWithParam<PptCase> {};

TEST_P(PptReference, MatchesConicSolver) {
    const auto c = GetParam();
    auto w = c.amplitude == 0.0 ? cut_witness_quantum(ghz_state().density(), Cut{"A", "B"}) : tri_bell_ab(c.amplitude);
    auto r = ppt_min(w);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, c.ppt, 1e-6);
    EXPECT_LE(r.constraint_violation, 1e-7);
    expect_ppt_feasible(r.minimizer, 1e-7);
    // The reported value is attained by the repaired minimizer.
    EXPECT_NEAR(r.value, (r.minimizer.matrix() * w.op().matrix()).trace().real(), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Frozen, PptReference,
                         ::testing::Values(PptCase{"ghz", 0.0, -0.25}, PptCase{"tri_bell_070", 0.7, -0.0542413364},
                                           PptCase{"tri_bell_090", 0.9, 0.01805}),
                         [](const auto &info) { return std::string(info.param.name); });

// min eigenvalue <= PPT value <= product minimum, on random witnesses.
TEST(Sandwich, RandomStates) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        auto rho = random_pure_state(SubsystemLayout::uniform(3, 2), rng).density();
        auto w = cut_witness_quantum(rho, all_cuts()[static_cast<std::size_t>(trial) % 3]);
        auto s = ppt_min(w);
        auto p = product_min(w, 16, 7 + static_cast<std::uint64_t>(trial));
        EXPECT_GE(s.value, w.min_eigenvalue() - 1e-7);
        EXPECT_LE(s.value, p.value + 1e-6);
        expect_ppt_feasible(s.minimizer, 1e-7);
    }
}

TEST(Sdp, RejectsUnsupportedShapes) {
    HermitianOperator big(SubsystemLayout::uniform(3, 3), CMat::Identity(27, 27));
    EXPECT_QERROR(ppt_min(big), DimensionError);
}

TEST(ProductSearch, FrozenValuesAndConsistency) {
    // Same reference script, BFGS over Bloch angles.
    auto ghz = cut_witness_quantum(ghz_state().density(), Cut{"A", "B"});
    EXPECT_NEAR(product_min(ghz).value, -0.25, 1e-8);
    auto w = tri_bell_ab(0.7);
    auto r = product_min(w);
    EXPECT_NEAR(r.value, -0.0542413364, 1e-8);
    // Value equals the expectation on the product of the returned first columns.
    CVec v = r.bases.bases()[0].col(0);
    for (std::size_t k = 1; k < r.bases.size(); ++k) {
        v = kron(v, CVec(r.bases.bases()[k].col(0)));
    }
    EXPECT_NEAR(expectation(w.op(), v), r.value, 1e-12);
    // Computational basis states are product vectors, so the minimum diagonal is an upper bound.
    EXPECT_LE(r.value, w.op().matrix().diagonal().real().minCoeff() + 1e-12);
}

TEST(ProductSearch, DeterministicForSeed) {
    auto w = tri_bell_ab(0.8);
    auto a = product_min(w, 8, 99);
    auto b = product_min(w, 8, 99);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.restarts_used, 8);
}

TEST(Spherical, UnitVectorsAndBasisCompletion) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    for (std::size_t d : {2U, 3U, 4U}) {
        std::vector<double> params(2 * (d - 1));
        for (auto &x : params) {
            x = u(rng);
        }
        CVec v = spherical_unit_vector(params.data(), d);
        EXPECT_NEAR(v.norm(), 1.0, 1e-14);
        CMat b = complete_basis(v);
        const auto n = static_cast<Eigen::Index>(d);
        EXPECT_LT(max_abs_diff(b.adjoint() * b, CMat::Identity(n, n)), 1e-12);
        EXPECT_LT((b.col(0) - v).norm(), 1e-12);
    }
    // Angle zero gives the first basis vector.
    std::vector<double> zero(2, 0.0);
    EXPECT_NEAR(std::abs(spherical_unit_vector(zero.data(), 2)(0)), 1.0, 1e-15);
}

TEST(NelderMead, Rosenbrock) {
    auto f = [](const std::vector<double> &x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    NelderMeadOptions o;
    o.max_evaluations = 20000;
    o.f_tolerance = 1e-20;
    auto r = nelder_mead(f, {-1.2, 1.0}, o);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], 1.0, 1e-4);
    EXPECT_LE(r.evaluations, 20000);
}

TEST(DistributionWitness, ComputationalBasisMatchesClassical) {
    std::mt19937_64 rng(43);
    auto rho = random_density_matrix(SubsystemLayout::uniform(3, 2), rng);
    const auto bases = LocalBasis::computational(rho.layout());
    auto a = distribution_witness(rho, Cut{"B", "C"}, bases);
    auto b = cut_witness_classical(measure_local(rho, bases), Cut{"B", "C"});
    EXPECT_EQ(a.values, b.values);
}

TEST(Sweep, CrossingAndCsv) {
    std::vector<double> grid;
    for (int k = 0; k < 14; ++k) {
        grid.push_back(0.60 + 0.03 * k);
    }
    SweepOptions o;
    o.restarts = 16;
    auto t = sweep_tri_bell(grid, o);
    ASSERT_EQ(t.rows.size(), grid.size());
    ASSERT_TRUE(t.crossing.has_value());
    EXPECT_NEAR(*t.crossing, 0.82, 0.02);
    for (const auto &r : t.rows) {
        EXPECT_LE(r.iota_tilde, r.iota_upper + 1e-6);
        EXPECT_GE(r.iota_tilde, r.min_eig - 1e-7);
        EXPECT_LE(r.constraint_violation, 1e-7);
    }
    std::ostringstream a, b;
    write_sweep_csv(t, a);
    write_sweep_csv(sweep_tri_bell(grid, o), b);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "amplitude,min_eig,iota_tilde,iota_upper,converged");
    EXPECT_QERROR(sweep_tri_bell({0.5}), DomainError);
}

TEST(Parallel, VisitsEveryIndexOnce) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto &h : hits) {
        EXPECT_EQ(h.load(), 1);
    }
}
