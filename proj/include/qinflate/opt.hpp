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
/**
 * @file opt.hpp
 * Product-basis minimisation of a witness and its PPT relaxation.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "qinflate/witness.hpp"

namespace qinflate {

struct SdpOptions {
    double penalty = 1.0;
    int max_iterations = 20000;
    double tolerance = 1e-7;
};

struct SdpResult {
    double value = 0.0;
    DensityMatrix minimizer;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    int iterations = 0;
    bool converged = false;
    /// Most negative eigenvalue over the four cone constraints, clipped at 0.
    double constraint_violation = 0.0;
};

/// Minimises Tr[rho W] over unit-trace rho that stay PSD under every single-factor
/// partial transpose. Consensus ADMM; the returned minimizer is repaired to exact
/// feasibility by mixing in the smallest sufficient amount of the maximally mixed state.
SdpResult ppt_min(const HermitianOperator &w, const SdpOptions &opts = {});
SdpResult ppt_min(const WitnessOperator &w, const SdpOptions &opts = {});

struct ProductSearchResult {
    double value = 0.0;
    LocalBasis bases;
    int restarts_used = 0;
};

/// Unit vector from generalised spherical coordinates: d - 1 polar angles then d - 1 phases.
CVec spherical_unit_vector(const double *params, std::size_t d);
/// Unitary whose first column is v.
CMat complete_basis(const CVec &v);

struct NelderMeadOptions {
    double initial_step = 0.4;
    double f_tolerance = 1e-14;
    int max_evaluations = 20000;
};
struct NelderMeadResult {
    std::vector<double> x;
    double f;
    int evaluations;
};
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             const NelderMeadOptions &opts = {});

/// Upper bound on min over product vectors of <v|W|v>, by multi-start Nelder-Mead.
ProductSearchResult product_min(const HermitianOperator &w, int restarts = 64, std::uint64_t seed = 0x5eedULL);
ProductSearchResult product_min(const WitnessOperator &w, int restarts = 64, std::uint64_t seed = 0x5eedULL);

/// Classical cut witness of the distribution produced by measuring rho in `bases`.
ClassicalTensor distribution_witness(const DensityMatrix &rho, const Cut &cut, const LocalBasis &bases);

struct SweepRow {
    double amplitude;
    double t;
    double min_eig;
    double iota_tilde;
    double iota_upper;
    bool converged;
    double constraint_violation;
};

struct SweepOptions {
    int restarts = 64;
    std::uint64_t seed = 0x5eedULL;
    unsigned threads = 0; ///< 0 picks hardware concurrency
    SdpOptions sdp;
    int bisection_steps = 12;
    bool locate_crossing = true;
};

struct SweepTable {
    std::vector<SweepRow> rows;
    std::optional<double> crossing; ///< amplitude where iota_tilde turns non-negative
};

/// Throws DomainError when a grid value lies outside [1/sqrt(3), 1).
SweepTable sweep_tri_bell(const std::vector<double> &grid, const SweepOptions &opts = {});

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn);

void write_sweep_csv(const SweepTable &table, std::ostream &os);

} // namespace qinflate
