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
 * @file linalg.hpp
 * Dense complex operators on labelled tensor-product spaces.
 */
#pragma once

#include <complex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qinflate/layout.hpp"

namespace qinflate {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kRankTol = 1e-8;
inline constexpr double kAngleTol = 1e-6;

class HermitianOperator {
  public:
    HermitianOperator() = default;
    /// Throws DimensionError on a size mismatch, NotHermitian beyond kHermitianTol.
    /// The stored matrix is the exact Hermitian part of `entries`.
    HermitianOperator(SubsystemLayout layout, const CMat &entries);

    [[nodiscard]] const SubsystemLayout &layout() const { return layout_; }
    [[nodiscard]] const CMat &matrix() const { return m_; }
    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] double trace() const { return m_.trace().real(); }
    [[nodiscard]] cplx operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

  private:
    SubsystemLayout layout_;
    CMat m_;
};

struct Spectrum {
    RVec eigenvalues; ///< ascending
    CMat eigenvectors; ///< column k pairs with eigenvalue k
};

class DensityMatrix {
  public:
    DensityMatrix() = default;
    /// Throws InvalidState when trace or positivity fail their tolerances.
    explicit DensityMatrix(HermitianOperator op);
    static DensityMatrix from_vector(const SubsystemLayout &layout, const CVec &psi);

    [[nodiscard]] const HermitianOperator &op() const { return op_; }
    [[nodiscard]] const SubsystemLayout &layout() const { return op_.layout(); }
    [[nodiscard]] const CMat &matrix() const { return op_.matrix(); }
    [[nodiscard]] std::size_t dim() const { return op_.dim(); }

  private:
    HermitianOperator op_;
};

HermitianOperator identity(const SubsystemLayout &layout);
/// Throws DuplicateLabel on a label collision.
HermitianOperator kron(const HermitianOperator &a, const HermitianOperator &b);
CMat kron(const CMat &a, const CMat &b);

HermitianOperator partial_trace(const HermitianOperator &x, const std::set<std::string> &keep);
DensityMatrix marginal(const DensityMatrix &rho, const std::set<std::string> &keep);
HermitianOperator partial_transpose(const HermitianOperator &x, const std::string &sub);
/// Raw matrix partial transpose of factor `sub_index` in `layout`.
CMat partial_transpose(const CMat &m, const SubsystemLayout &layout, std::size_t sub_index);

/// Reorders tensor factors so the layout reads `order`.
HermitianOperator permute(const HermitianOperator &x, const std::vector<std::string> &order);
HermitianOperator canonical(const HermitianOperator &x);
/// x tensored with identities on the labels of `target` missing from x, in target's order.
HermitianOperator embed(const HermitianOperator &x, const SubsystemLayout &target);

/// Sum and difference require equal label sets; b is permuted onto a's layout.
HermitianOperator operator+(const HermitianOperator &a, const HermitianOperator &b);
HermitianOperator operator-(const HermitianOperator &a, const HermitianOperator &b);
HermitianOperator operator*(double s, const HermitianOperator &a);

/// Cyclic complex Jacobi. Throws NotHermitian or NoConvergence.
Spectrum hermitian_eig(const HermitianOperator &x);
Spectrum hermitian_eig(const CMat &m);
double min_eigenvalue(const HermitianOperator &x);

double expectation(const HermitianOperator &x, const CVec &v);
double max_abs_diff(const CMat &a, const CMat &b);

/// Projectors onto eigenvectors with |lambda| > rank_tol and onto the rest.
std::pair<CMat, CMat> support_kernel_projectors(const HermitianOperator &x, double rank_tol = kRankTol);
CMat support_projector(const CMat &m, double rank_tol = kRankTol);
bool is_projector(const CMat &p, double tol = 1e-9);
/// True iff the top eigenvalue of p q p is at least 1 - angle_tol. Throws NotProjector.
bool subspace_intersects(const CMat &p, const CMat &q, double angle_tol = kAngleTol);
std::size_t projector_rank(const CMat &p);

} // namespace qinflate
