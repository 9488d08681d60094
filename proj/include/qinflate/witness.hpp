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
 * @file witness.hpp
 * Hall operator, Cut-inflation witnesses, verdicts and the closed forms
 * they are checked against.
 */
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qinflate/states.hpp"

namespace qinflate {

inline constexpr double kVerdictTol = 1e-8;
inline constexpr double kClusterTol = 1e-7;
inline constexpr double kGhzFidelityBound = 0.6830127018922193; // (1 + sqrt 3) / 4
inline constexpr double kWFidelityBound = 0.7602;

using LabelSet = std::set<std::string>;
using MarginalFamily = std::map<LabelSet, DensityMatrix>;
using DistributionFamily = std::map<LabelSet, Distribution>;

struct Cut {
    std::string x;
    std::string y;
    /// "AB" style, one character per label.
    static Cut parse(const std::string &s);
    [[nodiscard]] std::string name() const { return x + y; }
};

/// The three cuts (A,B), (A,C), (B,C).
std::vector<Cut> all_cuts();

enum class WitnessKind { HallDelta, HallLambda, CutWitness };

class WitnessOperator {
  public:
    WitnessOperator(HermitianOperator op, WitnessKind kind, std::optional<Cut> cut = std::nullopt);

    [[nodiscard]] const HermitianOperator &op() const { return op_; }
    [[nodiscard]] WitnessKind kind() const { return kind_; }
    [[nodiscard]] const std::optional<Cut> &cut() const { return cut_; }
    [[nodiscard]] const Spectrum &spectrum() const { return spectrum_; }
    [[nodiscard]] double min_eigenvalue() const { return spectrum_.eigenvalues(0); }
    [[nodiscard]] std::string describe() const;

  private:
    HermitianOperator op_;
    WitnessKind kind_;
    std::optional<Cut> cut_;
    Spectrum spectrum_;
};

/// Real tensor over a product outcome space.
struct ClassicalTensor {
    SubsystemLayout layout;
    std::vector<double> values;
    [[nodiscard]] double at(const std::vector<std::size_t> &outcome) const { return values[layout.flat(outcome)]; }
};

enum class VerdictStatus { WitnessedIncompatible, Inconclusive };

struct Evidence {
    std::string witness;
    double min_value = 0.0;
    std::optional<CVec> vector;
    std::optional<std::vector<std::size_t>> outcome;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::optional<Evidence> evidence;
    [[nodiscard]] bool incompatible() const { return status == VerdictStatus::WitnessedIncompatible; }
};

struct Cluster {
    double value;
    int multiplicity;
};

/// All nonempty proper subsets of the layout's labels.
MarginalFamily marginals_of(const DensityMatrix &rho);
DistributionFamily marginals_of(const Distribution &p);

/// Throws OddCardinalityRequired, MissingMarginal or InconsistentMarginals.
WitnessOperator hall_delta(const MarginalFamily &marginals);
/// Same alternating sum including the full set; needs every nonempty subset.
WitnessOperator hall_lambda(const MarginalFamily &marginals);
ClassicalTensor classical_delta(const DistributionFamily &marginals);

/// Throws DimensionError unless the state has exactly three subsystems.
WitnessOperator cut_witness_quantum(const DensityMatrix &rho, const Cut &cut);
/// Same assembly for an operator that need not be a valid state.
WitnessOperator cut_witness_quantum(const HermitianOperator &rho, const Cut &cut);
ClassicalTensor cut_witness_classical(const Distribution &p, const Cut &cut);

Verdict verdict(const WitnessOperator &w, double tol = kVerdictTol);
Verdict verdict(const ClassicalTensor &t, double tol = kVerdictTol);

std::vector<Cluster> cluster_eigenvalues(const RVec &values, double tol = kClusterTol);

struct SuppKerResult {
    bool intersects = false;
    double overlap = 0.0; ///< top eigenvalue of P_supp P_ker P_supp
    std::size_t nu_minus_rank = 0;
    std::size_t kernel_rank = 0;
    CVec phi; ///< top eigenvector of that product
    double phi_value = 0.0; ///< <phi| I_xy |phi>
};

SuppKerResult supp_ker_analysis(const DensityMatrix &rho, const Cut &cut);
bool supp_ker_test(const DensityMatrix &rho, const Cut &cut);

/// tau Sum a_ijk |ijk> = Sum (-1)^(i+j+k) conj(a_ijk) |~i ~j ~k>.
CVec tau_apply(const CVec &psi);
/// Returns tau^-1 rho tau; throws ConstraintViolated if Delta != rho + tau^-1 rho tau.
HermitianOperator pure_delta_structure(const PureState &psi);

struct FidelityReport {
    double f_ghz;
    double f_w;
    bool flagged;
};
FidelityReport fidelity_witness(const DensityMatrix &rho);

struct CubicReport {
    std::array<double, 4> coefficients; ///< x^3, x^2, x, 1
    std::array<double, 3> roots; ///< ascending
    double product_of_roots;
};
/// Throws DomainError for t < 3.
CubicReport tri_bell_cubic(double t);
/// Vieta product only; defined for any real t.
double tri_bell_cubic_root_product(double t);
/// {(t-2)/t^2, r_i/t^2}, each twice, ascending.
std::vector<double> tri_bell_witness_eigs(double t);

struct Prop5Params {
    double a0 = 0.0, a4 = 0.0, a5 = 0.0, a6 = 0.0, a7 = 0.0, phi0 = 0.0;
};
struct Prop5Result {
    double closed_form;
    double assembled;
};
PureState prop5_state(const Prop5Params &p);
/// -a0^2 (1 - a0^2 - a4^2); ordering of the canonical form is not imposed.
double prop5_entry(const Prop5Params &p);
Prop5Result prop5_check(const Prop5Params &p);

std::vector<double> werner_ghz_eigs(double p);
std::vector<double> werner_w_eigs(double p);
struct WernerThresholds {
    double ghz;
    double w;
};
/// Bisection, 60 halvings, on the closed-form minimum eigenvalue.
WernerThresholds werner_thresholds();

std::vector<double> toth_acin_eigs(double c);

struct QutritCutSpectra {
    Cut cut;
    RVec mixed;
    RVec pure;
};
struct QutritReport {
    double p0, p1;
    std::vector<QutritCutSpectra> cuts;
    bool mixed_matches_expected; ///< {7/9 x3, 4/9 x12, 1/9 x12} within 1e-9
    double pure_min;
};
QutritReport qutrit_witnesses(double p0, double p1);

} // namespace qinflate
