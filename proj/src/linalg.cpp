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
#include "qinflate/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qinflate/error.hpp"

namespace qinflate {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-13;

double max_abs(const CMat &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_hermitian(const CMat &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionError, "operator matrix is not square");
    }
    const double scale = std::max(1.0, max_abs(m));
    const double dev = max_abs(m - m.adjoint());
    if (dev > kHermitianTol * scale) {
        throw Error(ErrorCode::NotHermitian,
                    "matrix differs from its adjoint by " + std::to_string(dev));
    }
}

// For each flat index of `layout`, the flat index over the factors in `mask`
// (true) and over the complementary factors.
struct SplitIndex {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> traced;
};

SplitIndex split_index(const SubsystemLayout &layout, const std::vector<bool> &mask) {
    const std::size_t n = layout.total_dim();
    SplitIndex s{std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
    const auto &dims = layout.dims();
    for (std::size_t i = 0; i < n; ++i) {
        auto dg = layout.digits(i);
        std::size_t k = 0, t = 0;
        for (std::size_t f = 0; f < dims.size(); ++f) {
            if (mask[f]) {
                k = k * dims[f] + dg[f];
            } else {
                t = t * dims[f] + dg[f];
            }
        }
        s.kept[i] = k;
        s.traced[i] = t;
    }
    return s;
}

} // namespace

HermitianOperator::HermitianOperator(SubsystemLayout layout, const CMat &entries)
    : layout_(std::move(layout)) {
    const auto n = static_cast<Eigen::Index>(layout_.total_dim());
    if (entries.rows() != n || entries.cols() != n) {
        throw Error(ErrorCode::DimensionError,
                    "matrix side " + std::to_string(entries.rows()) + " does not match layout dimension " +
                        std::to_string(n));
    }
    require_hermitian(entries);
    m_ = 0.5 * (entries + entries.adjoint());
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
    const double tr = op_.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw Error(ErrorCode::InvalidState, "density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    const double lo = min_eigenvalue(op_);
    if (lo < -kPsdTol) {
        throw Error(ErrorCode::InvalidState,
                    "density matrix is not positive semidefinite (min eigenvalue " + std::to_string(lo) + ")");
    }
}

DensityMatrix DensityMatrix::from_vector(const SubsystemLayout &layout, const CVec &psi) {
    return DensityMatrix(HermitianOperator(layout, psi * psi.adjoint()));
}

HermitianOperator identity(const SubsystemLayout &layout) {
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    return {layout, CMat::Identity(n, n)};
}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

HermitianOperator kron(const HermitianOperator &a, const HermitianOperator &b) {
    return {a.layout().concat(b.layout()), kron(a.matrix(), b.matrix())};
}

HermitianOperator partial_trace(const HermitianOperator &x, const std::set<std::string> &keep) {
    const auto &layout = x.layout();
    auto out_layout = layout.restrict_to(keep);
    std::vector<bool> mask(layout.size());
    for (std::size_t f = 0; f < layout.size(); ++f) {
        mask[f] = keep.count(layout.labels()[f]) != 0;
    }
    auto s = split_index(layout, mask);
    const std::size_t n = layout.total_dim();
    const auto m = static_cast<Eigen::Index>(out_layout.total_dim());
    CMat out = CMat::Zero(m, m);
    const CMat &src = x.matrix();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            if (s.traced[r] == s.traced[c]) {
                out(static_cast<Eigen::Index>(s.kept[r]), static_cast<Eigen::Index>(s.kept[c])) +=
                    src(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return {out_layout, out};
}

DensityMatrix marginal(const DensityMatrix &rho, const std::set<std::string> &keep) {
    return DensityMatrix(partial_trace(rho.op(), keep));
}

CMat partial_transpose(const CMat &m, const SubsystemLayout &layout, std::size_t sub_index) {
    const std::size_t n = layout.total_dim();
    std::vector<std::size_t> stride(layout.size(), 1);
    for (std::size_t f = layout.size() - 1; f-- > 0;) {
        stride[f] = stride[f + 1] * layout.dims()[f + 1];
    }
    const std::size_t st = stride[sub_index];
    const std::size_t d = layout.dims()[sub_index];
    CMat out(m.rows(), m.cols());
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t dc = (c / st) % d;
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t dr = (r / st) % d;
            const std::size_t r2 = r - dr * st + dc * st;
            const std::size_t c2 = c - dc * st + dr * st;
            out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) =
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

HermitianOperator partial_transpose(const HermitianOperator &x, const std::string &sub) {
    const std::size_t idx = x.layout().index_of(sub);
    return {x.layout(), partial_transpose(x.matrix(), x.layout(), idx)};
}

HermitianOperator permute(const HermitianOperator &x, const std::vector<std::string> &order) {
    const auto &from = x.layout();
    auto to = from.reordered(order);
    if (to == from) {
        return x;
    }
    const std::size_t n = from.total_dim();
    std::vector<std::size_t> pos(order.size());
    for (std::size_t f = 0; f < order.size(); ++f) {
        pos[f] = from.index_of(order[f]);
    }
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto dg = from.digits(i);
        std::vector<std::size_t> nd(order.size());
        for (std::size_t f = 0; f < order.size(); ++f) {
            nd[f] = dg[pos[f]];
        }
        map[i] = to.flat(nd);
    }
    const CMat &src = x.matrix();
    CMat out(src.rows(), src.cols());
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            out(static_cast<Eigen::Index>(map[r]), static_cast<Eigen::Index>(map[c])) =
                src(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return {to, out};
}

HermitianOperator canonical(const HermitianOperator &x) {
    return permute(x, x.layout().canonical().labels());
}

HermitianOperator embed(const HermitianOperator &x, const SubsystemLayout &target) {
    std::vector<std::string> missing_labels;
    std::vector<std::size_t> missing_dims;
    for (const auto &l : x.layout().labels()) {
        if (!target.contains(l)) {
            throw Error(ErrorCode::UnknownLabel, "label '" + l + "' absent from target layout");
        }
        if (target.dim_of(l) != x.layout().dim_of(l)) {
            throw Error(ErrorCode::DimensionError, "dimension of '" + l + "' differs from target layout");
        }
    }
    for (std::size_t f = 0; f < target.size(); ++f) {
        if (!x.layout().contains(target.labels()[f])) {
            missing_labels.push_back(target.labels()[f]);
            missing_dims.push_back(target.dims()[f]);
        }
    }
    if (missing_labels.empty()) {
        return permute(x, target.labels());
    }
    auto full = kron(x, identity(SubsystemLayout(missing_labels, missing_dims)));
    return permute(full, target.labels());
}

namespace {

CMat aligned(const HermitianOperator &a, const HermitianOperator &b) {
    if (a.layout().label_set() != b.layout().label_set()) {
        throw Error(ErrorCode::DimensionError, "operators act on different subsystems");
    }
    auto bp = permute(b, a.layout().labels());
    if (bp.layout() != a.layout()) {
        throw Error(ErrorCode::DimensionError, "operators disagree on subsystem dimensions");
    }
    return bp.matrix();
}

} // namespace

HermitianOperator operator+(const HermitianOperator &a, const HermitianOperator &b) {
    return {a.layout(), a.matrix() + aligned(a, b)};
}

HermitianOperator operator-(const HermitianOperator &a, const HermitianOperator &b) {
    return {a.layout(), a.matrix() - aligned(a, b)};
}

HermitianOperator operator*(double s, const HermitianOperator &a) {
    return {a.layout(), s * a.matrix()};
}

Spectrum hermitian_eig(const CMat &m) {
    require_hermitian(m);
    const Eigen::Index n = m.rows();
    CMat a = 0.5 * (m + m.adjoint());
    CMat v = CMat::Identity(n, n);
    const double thresh = kOffDiagTol * std::max(1.0, a.norm());

    auto off_norm = [&]() {
        double s = 0.0;
        for (Eigen::Index q = 0; q < n; ++q) {
            for (Eigen::Index p = 0; p < n; ++p) {
                if (p != q) {
                    s += std::norm(a(p, q));
                }
            }
        }
        return std::sqrt(s);
    };

    bool converged = false;
    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        if (off_norm() < thresh) {
            converged = true;
            break;
        }
        if (sweep == kMaxSweeps) {
            break;
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) {
                    continue;
                }
                const cplx ph = apq / b; // e^{i phi}
                const cplx phc = std::conj(ph);
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * b);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * phc * akq;
                    a(k, q) = s * akp + c * phc * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * ph * aqk;
                    a(q, k) = s * apk + c * ph * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (Eigen::Index k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - s * phc * vkq;
                    v(k, q) = s * vkp + c * phc * vkq;
                }
            }
        }
    }
    if (!converged) {
        throw Error(ErrorCode::NoConvergence, "Jacobi eigensolver exceeded its sweep cap");
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });
    Spectrum out{RVec(n), CMat(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
        out.eigenvectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

Spectrum hermitian_eig(const HermitianOperator &x) { return hermitian_eig(x.matrix()); }

double min_eigenvalue(const HermitianOperator &x) { return hermitian_eig(x).eigenvalues(0); }

double expectation(const HermitianOperator &x, const CVec &v) {
    return (v.adjoint() * x.matrix() * v)(0, 0).real();
}

double max_abs_diff(const CMat &a, const CMat &b) { return max_abs(a - b); }

CMat support_projector(const CMat &m, double rank_tol) {
    auto sp = hermitian_eig(m);
    const Eigen::Index n = m.rows();
    CMat p = CMat::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (std::abs(sp.eigenvalues(k)) > rank_tol) {
            p += sp.eigenvectors.col(k) * sp.eigenvectors.col(k).adjoint();
        }
    }
    return p;
}

std::pair<CMat, CMat> support_kernel_projectors(const HermitianOperator &x, double rank_tol) {
    auto sp = hermitian_eig(x);
    const auto n = static_cast<Eigen::Index>(x.dim());
    CMat ps = CMat::Zero(n, n);
    CMat pk = CMat::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        CMat outer = sp.eigenvectors.col(k) * sp.eigenvectors.col(k).adjoint();
        if (std::abs(sp.eigenvalues(k)) > rank_tol) {
            ps += outer;
        } else {
            pk += outer;
        }
    }
    return {ps, pk};
}

bool is_projector(const CMat &p, double tol) {
    if (p.rows() != p.cols()) {
        return false;
    }
    return max_abs(p - p.adjoint()) <= tol && max_abs(p * p - p) <= tol;
}

std::size_t projector_rank(const CMat &p) {
    return static_cast<std::size_t>(std::llround(p.trace().real()));
}

bool subspace_intersects(const CMat &p, const CMat &q, double angle_tol) {
    if (!is_projector(p) || !is_projector(q)) {
        throw Error(ErrorCode::NotProjector, "subspace test needs Hermitian idempotent inputs");
    }
    if (p.rows() != q.rows()) {
        throw Error(ErrorCode::DimensionError, "projectors act on different spaces");
    }
    CMat pqp = p * q * p;
    pqp = 0.5 * (pqp + pqp.adjoint());
    auto sp = hermitian_eig(pqp);
    return sp.eigenvalues(sp.eigenvalues.size() - 1) >= 1.0 - angle_tol;
}

} // namespace qinflate
