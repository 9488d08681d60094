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
 * @file states.hpp
 * State and distribution families, local measurements, nu decomposition.
 */
#pragma once

#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qinflate/linalg.hpp"

namespace qinflate {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kProbClamp = 1e-12;

class PureState {
  public:
    PureState() = default;
    /// Throws InvalidState when the norm is off by more than kNormTol.
    PureState(SubsystemLayout layout, CVec amplitudes);

    [[nodiscard]] const SubsystemLayout &layout() const { return layout_; }
    [[nodiscard]] const CVec &amplitudes() const { return amp_; }
    [[nodiscard]] DensityMatrix density() const;

  private:
    SubsystemLayout layout_;
    CVec amp_;
};

/// Probability tensor; the layout labels name the variables and dims are outcome counts.
class Distribution {
  public:
    Distribution() = default;
    /// Entries in [-kProbClamp, 0) are clamped to 0; anything lower, or a sum off
    /// by more than kTraceTol, throws InvalidState.
    Distribution(SubsystemLayout layout, std::vector<double> probs);

    [[nodiscard]] const SubsystemLayout &layout() const { return layout_; }
    [[nodiscard]] const std::vector<double> &probs() const { return probs_; }
    [[nodiscard]] double at(const std::vector<std::size_t> &outcome) const { return probs_[layout_.flat(outcome)]; }
    [[nodiscard]] Distribution marginal(const std::set<std::string> &keep) const;

  private:
    SubsystemLayout layout_;
    std::vector<double> probs_;
};

class LocalBasis {
  public:
    LocalBasis() = default;
    /// Throws InvalidParameter when a matrix is not unitary within 1e-10.
    explicit LocalBasis(std::vector<CMat> bases);
    static LocalBasis computational(const SubsystemLayout &layout);

    [[nodiscard]] const std::vector<CMat> &bases() const { return bases_; }
    [[nodiscard]] std::size_t size() const { return bases_.size(); }
    /// Product of the per-subsystem unitaries.
    [[nodiscard]] CMat product() const;

  private:
    std::vector<CMat> bases_;
};

struct NuPair {
    HermitianOperator nu_plus;
    HermitianOperator nu_minus;
};

struct Bipartition {
    std::set<std::string> first;
    std::set<std::string> second;
};

PureState ghz_state();
PureState w_state();
Distribution ghz_distn();
Distribution w_distn();
DensityMatrix encode_distribution(const Distribution &d);

/// Throws DomainError for t < 3.
PureState tri_bell(double t);
/// Amplitude a of |100> with t = 2 / (1 - a^2); a must lie in [1/sqrt(3), 1).
PureState tri_bell_amplitude(double a);
double tri_bell_t_from_amplitude(double a);

DensityMatrix omega_example();
/// p |psi><psi| + (1 - p) / 8 identity. Throws DomainError for p outside [0, 1].
DensityMatrix white_noise_mixture(const PureState &psi, double p);

/// The Pauli-expanded operator for any real c, with no positivity check.
HermitianOperator toth_acin_operator(double c);
/// Throws InvalidParameter when the operator is not a valid state.
DensityMatrix toth_acin(double c);

/// Three-qutrit states with weights (p0, p1, 1 - p0 - p1). Throws DomainError.
std::pair<PureState, DensityMatrix> qutrit_pair(double p0, double p1);
/// Basis states |Psi_i> of the qutrit pair.
PureState qutrit_component(int i);
/// Average of (Z3^k)^{x3} rho (Z3^k)^{x3 dagger} over k = 0, 1, 2.
HermitianOperator z3_twirl(const HermitianOperator &rho);

struct Schmidt224Options {
    bool enforce_ordering = true;
};
/// Canonical 2x2x4 state. Throws ConstraintViolated naming the failed condition.
PureState schmidt224(const std::array<double, 8> &alphas, double phi0, double phi1,
                     Schmidt224Options opts = {});
/// Validates an arbitrary 2x2x4 amplitude vector against the canonical form.
void check_schmidt224_form(const PureState &psi, Schmidt224Options opts = {});

/// Throws DimensionError when the bases do not match the layout.
Distribution measure_local(const DensityMatrix &rho, const LocalBasis &bases);
NuPair nu_decomposition(const DensityMatrix &rho, const std::string &x, const std::string &y);
/// rho_x (x) rho_y - rho_xy on the canonical (x, y) layout.
HermitianOperator product_defect(const DensityMatrix &rho, const std::string &x, const std::string &y);
std::optional<Bipartition> is_biseparable_pure(const PureState &psi, double tol = 1e-8);

PureState random_pure_state(const SubsystemLayout &layout, std::mt19937_64 &rng);
/// Partial trace of a random pure state on twice the number of factors.
DensityMatrix random_density_matrix(const SubsystemLayout &layout, std::mt19937_64 &rng);
Distribution random_distribution(const SubsystemLayout &layout, std::mt19937_64 &rng);

} // namespace qinflate
