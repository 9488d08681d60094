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
#include "qinflate/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qinflate/error.hpp"

namespace qinflate {

namespace {

SubsystemLayout qubits3() { return SubsystemLayout::uniform(3, 2); }

CMat pauli(int k) {
    CMat m = CMat::Zero(2, 2);
    switch (k) {
    case 0:
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        break;
    case 1:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case 2:
        m(0, 1) = cplx(0.0, -1.0);
        m(1, 0) = cplx(0.0, 1.0);
        break;
    default:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    }
    return m;
}

CMat kron3(const CMat &a, const CMat &b, const CMat &c) { return kron(kron(a, b), c); }

constexpr double kUnitaryTol = 1e-10;
constexpr double kFormTol = 1e-10;

} // namespace

PureState::PureState(SubsystemLayout layout, CVec amplitudes)
    : layout_(std::move(layout)), amp_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amp_.size()) != layout_.total_dim()) {
        throw Error(ErrorCode::DimensionError, "amplitude vector length does not match layout dimension");
    }
    const double nrm = amp_.norm();
    if (std::abs(nrm - 1.0) > kNormTol) {
        throw Error(ErrorCode::InvalidState, "pure state norm is " + std::to_string(nrm) + ", expected 1");
    }
}

DensityMatrix PureState::density() const { return DensityMatrix::from_vector(layout_, amp_); }

Distribution::Distribution(SubsystemLayout layout, std::vector<double> probs)
    : layout_(std::move(layout)), probs_(std::move(probs)) {
    if (probs_.size() != layout_.total_dim()) {
        throw Error(ErrorCode::DimensionError, "probability tensor size does not match outcome dims");
    }
    double sum = 0.0;
    for (auto &p : probs_) {
        if (!std::isfinite(p) || p < -kProbClamp) {
            throw Error(ErrorCode::InvalidState, "distribution has a negative entry " + std::to_string(p));
        }
        if (p < 0.0) {
            p = 0.0;
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kTraceTol) {
        throw Error(ErrorCode::InvalidState, "distribution sums to " + std::to_string(sum) + ", expected 1");
    }
}

Distribution Distribution::marginal(const std::set<std::string> &keep) const {
    auto out_layout = layout_.restrict_to(keep);
    std::vector<double> out(out_layout.total_dim(), 0.0);
    std::vector<std::size_t> pos;
    for (const auto &l : out_layout.labels()) {
        pos.push_back(layout_.index_of(l));
    }
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        auto dg = layout_.digits(i);
        std::vector<std::size_t> od;
        for (auto p : pos) {
            od.push_back(dg[p]);
        }
        out[out_layout.flat(od)] += probs_[i];
    }
    return {out_layout, out};
}

LocalBasis::LocalBasis(std::vector<CMat> bases) : bases_(std::move(bases)) {
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        const auto &u = bases_[i];
        if (u.rows() != u.cols() ||
            max_abs_diff(u.adjoint() * u, CMat::Identity(u.rows(), u.cols())) > kUnitaryTol) {
            throw Error(ErrorCode::InvalidParameter, "local basis " + std::to_string(i) + " is not unitary");
        }
    }
}

LocalBasis LocalBasis::computational(const SubsystemLayout &layout) {
    std::vector<CMat> b;
    for (auto d : layout.dims()) {
        b.push_back(CMat::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
    }
    return LocalBasis(b);
}

CMat LocalBasis::product() const {
    CMat u = bases_.at(0);
    for (std::size_t i = 1; i < bases_.size(); ++i) {
        u = kron(u, bases_[i]);
    }
    return u;
}

PureState ghz_state() {
    CVec v = CVec::Zero(8);
    v(0) = v(7) = 1.0 / std::sqrt(2.0);
    return {qubits3(), v};
}

PureState w_state() {
    CVec v = CVec::Zero(8);
    v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
    return {qubits3(), v};
}

Distribution ghz_distn() {
    std::vector<double> p(8, 0.0);
    p[0] = p[7] = 0.5;
    return {qubits3(), p};
}

Distribution w_distn() {
    std::vector<double> p(8, 0.0);
    p[1] = p[2] = p[4] = 1.0 / 3.0;
    return {qubits3(), p};
}

DensityMatrix encode_distribution(const Distribution &d) {
    const auto n = static_cast<Eigen::Index>(d.probs().size());
    CMat m = CMat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = d.probs()[static_cast<std::size_t>(i)];
    }
    return DensityMatrix(HermitianOperator(d.layout(), m));
}

PureState tri_bell(double t) {
    if (!(t >= 3.0) || !std::isfinite(t)) {
        throw Error(ErrorCode::DomainError, "tri_bell needs t >= 3");
    }
    CVec v = CVec::Zero(8);
    v(4) = std::sqrt((t - 2.0) / t);
    v(1) = v(2) = 1.0 / std::sqrt(t);
    return {qubits3(), v};
}

double tri_bell_t_from_amplitude(double a) {
    const double lo = 1.0 / std::sqrt(3.0);
    if (!(a >= lo - 1e-15) || !(a < 1.0)) {
        throw Error(ErrorCode::DomainError, "amplitude must lie in [1/sqrt(3), 1)");
    }
    return std::max(3.0, 2.0 / (1.0 - a * a));
}

PureState tri_bell_amplitude(double a) {
    (void)tri_bell_t_from_amplitude(a);
    // Built from a directly so that the |100> amplitude is exact.
    const double big = std::max(a, 1.0 / std::sqrt(3.0));
    CVec v = CVec::Zero(8);
    v(4) = big;
    v(1) = v(2) = std::sqrt((1.0 - big * big) / 2.0);
    return {qubits3(), v};
}

DensityMatrix omega_example() {
    CVec psi1 = CVec::Zero(8);
    psi1(0) = 0.9;
    psi1(5) = psi1(6) = std::sqrt(0.19 / 2.0);
    CVec plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CVec zero(2);
    zero << 1.0, 0.0;
    CVec zpp = kron(kron(zero, plus), plus);
    CMat m = 0.3 * psi1 * psi1.adjoint() + 0.7 * zpp * zpp.adjoint();
    return DensityMatrix(HermitianOperator(qubits3(), m));
}

DensityMatrix white_noise_mixture(const PureState &psi, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::DomainError, "noise weight p must lie in [0, 1]");
    }
    if (psi.layout().total_dim() != 8 || psi.layout().size() != 3) {
        throw Error(ErrorCode::DimensionError, "white-noise family is defined on three qubits");
    }
    CMat m = p * psi.amplitudes() * psi.amplitudes().adjoint() + (1.0 - p) / 8.0 * CMat::Identity(8, 8);
    return DensityMatrix(HermitianOperator(psi.layout(), m));
}

HermitianOperator toth_acin_operator(double c) {
    CMat m = CMat::Identity(8, 8) / 8.0;
    const CMat id = pauli(0);
    for (int k = 1; k <= 3; ++k) {
        const CMat s = pauli(k);
        m += kron3(id, s, s) / 24.0;
        m -= c / 16.0 * (kron3(s, id, s) + kron3(s, s, id));
    }
    return {qubits3(), m};
}

DensityMatrix toth_acin(double c) {
    auto op = toth_acin_operator(c);
    const double lo = min_eigenvalue(op);
    if (lo < -kPsdTol) {
        throw Error(ErrorCode::InvalidParameter,
                    "c = " + std::to_string(c) + " gives a non-positive operator (min eigenvalue " +
                        std::to_string(lo) + ")");
    }
    return DensityMatrix(op);
}

PureState qutrit_component(int i) {
    if (i < 0 || i > 2) {
        throw Error(ErrorCode::DomainError, "qutrit component index must be 0, 1 or 2");
    }
    CVec v = CVec::Zero(27);
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            for (int z = 0; z < 3; ++z) {
                if ((x + y + z) % 3 == i) {
                    v(9 * x + 3 * y + z) = 1.0 / 3.0;
                }
            }
        }
    }
    return {SubsystemLayout::uniform(3, 3), v};
}

std::pair<PureState, DensityMatrix> qutrit_pair(double p0, double p1) {
    const double p2 = 1.0 - p0 - p1;
    if (!(p0 >= 0.0 && p0 <= 1.0) || !(p1 >= 0.0 && p1 <= 1.0) || p2 < -1e-12) {
        throw Error(ErrorCode::DomainError, "qutrit weights need p0, p1, p0 + p1 in [0, 1]");
    }
    const std::array<double, 3> w{p0, p1, std::max(0.0, p2)};
    CVec v = CVec::Zero(27);
    CMat m = CMat::Zero(27, 27);
    for (int i = 0; i < 3; ++i) {
        const CVec c = qutrit_component(i).amplitudes();
        v += std::sqrt(w[static_cast<std::size_t>(i)]) * c;
        m += w[static_cast<std::size_t>(i)] * c * c.adjoint();
    }
    const auto layout = SubsystemLayout::uniform(3, 3);
    v /= v.norm();
    return {PureState(layout, v), DensityMatrix(HermitianOperator(layout, m))};
}

HermitianOperator z3_twirl(const HermitianOperator &rho) {
    if (rho.layout().size() != 3 || rho.layout().total_dim() != 27) {
        throw Error(ErrorCode::DimensionError, "Z3 twirl acts on three qutrits");
    }
    const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CMat acc = CMat::Zero(27, 27);
    for (int k = 0; k < 3; ++k) {
        CMat z = CMat::Zero(3, 3);
        for (int j = 0; j < 3; ++j) {
            z(j, j) = std::pow(omega, k * j);
        }
        CMat u = kron3(z, z, z);
        acc += u * rho.matrix() * u.adjoint();
    }
    return {rho.layout(), acc / 3.0};
}

namespace {

constexpr std::array<int, 8> kSchmidtSlots{0, 5, 9, 10, 12, 13, 14, 15};

void fail_form(const std::string &cond, const std::string &detail) {
    throw Error(ErrorCode::ConstraintViolated, cond + ": " + detail);
}

std::string ket224(int idx) {
    std::ostringstream os;
    os << '|' << idx / 8 << (idx / 4) % 2 << idx % 4 << '>';
    return os.str();
}

} // namespace

void check_schmidt224_form(const PureState &psi, Schmidt224Options opts) {
    const auto &dims = psi.layout().dims();
    if (dims.size() != 3 || dims[0] != 2 || dims[1] != 2 || dims[2] != 4) {
        throw Error(ErrorCode::DimensionError, "canonical form is defined on a 2x2x4 layout");
    }
    const CVec &a = psi.amplitudes();
    for (int idx : {1, 4, 8, 2, 3}) {
        if (std::abs(a(idx)) > kFormTol) {
            fail_form("condition 1 (zero pattern)", "amplitude of " + ket224(idx) + " must vanish");
        }
    }
    for (int idx : {6, 7, 11}) {
        if (std::abs(a(idx)) > kFormTol) {
            fail_form("condition 3 (B0 zero pattern)", "amplitude of " + ket224(idx) + " must vanish");
        }
    }
    for (int idx : {5, 9, 12, 13, 14, 15}) {
        if (std::abs(a(idx).imag()) > kFormTol || a(idx).real() < -kFormTol) {
            fail_form("condition 4 (non-negativity)", "amplitude of " + ket224(idx) + " must be real and >= 0");
        }
    }
    if (opts.enforce_ordering && std::abs(a(0)) + kFormTol < std::abs(a(13))) {
        fail_form("condition 5 (ordering)", "|alpha_0| must be at least |alpha_5|");
    }
}

PureState schmidt224(const std::array<double, 8> &alphas, double phi0, double phi1, Schmidt224Options opts) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] >= 0.0)) {
            fail_form("condition 4 (non-negativity)", "alpha_" + std::to_string(i) + " must be >= 0");
        }
        norm2 += alphas[i] * alphas[i];
    }
    if (std::abs(norm2 - 1.0) > kNormTol) {
        fail_form("normalisation", "sum of alpha^2 is " + std::to_string(norm2));
    }
    CVec v = CVec::Zero(16);
    for (std::size_t i = 0; i < 8; ++i) {
        v(kSchmidtSlots[i]) = alphas[i];
    }
    v(0) *= std::polar(1.0, phi0);
    v(10) *= std::polar(1.0, phi1);
    PureState psi(SubsystemLayout({"A", "B", "C"}, {2, 2, 4}), v);
    check_schmidt224_form(psi, opts);
    return psi;
}

Distribution measure_local(const DensityMatrix &rho, const LocalBasis &bases) {
    const auto &layout = rho.layout();
    if (bases.size() != layout.size()) {
        throw Error(ErrorCode::DimensionError, "need one local basis per subsystem");
    }
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (static_cast<std::size_t>(bases.bases()[i].rows()) != layout.dims()[i]) {
            throw Error(ErrorCode::DimensionError,
                        "basis for '" + layout.labels()[i] + "' has the wrong dimension");
        }
    }
    CMat u = bases.product();
    CMat rot = u.adjoint() * rho.matrix() * u;
    std::vector<double> p(layout.total_dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = rot(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
    }
    return {layout, p};
}

HermitianOperator product_defect(const DensityMatrix &rho, const std::string &x, const std::string &y) {
    if (x == y) {
        throw Error(ErrorCode::InvalidParameter, "cut needs two distinct subsystems");
    }
    auto rx = partial_trace(rho.op(), {x});
    auto ry = partial_trace(rho.op(), {y});
    auto rxy = canonical(partial_trace(rho.op(), {x, y}));
    return canonical(kron(rx, ry)) - rxy;
}

NuPair nu_decomposition(const DensityMatrix &rho, const std::string &x, const std::string &y) {
    auto d = product_defect(rho, x, y);
    auto sp = hermitian_eig(d);
    const auto n = static_cast<Eigen::Index>(d.dim());
    CMat plus = CMat::Zero(n, n);
    CMat minus = CMat::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double l = sp.eigenvalues(k);
        CMat outer = sp.eigenvectors.col(k) * sp.eigenvectors.col(k).adjoint();
        if (l > 0.0) {
            plus += l * outer;
        } else {
            minus -= l * outer;
        }
    }
    return {HermitianOperator(d.layout(), plus), HermitianOperator(d.layout(), minus)};
}

std::optional<Bipartition> is_biseparable_pure(const PureState &psi, double tol) {
    const auto &layout = psi.layout();
    if (layout.size() < 2) {
        throw Error(ErrorCode::DimensionError, "biseparability needs at least two subsystems");
    }
    auto rho = psi.density();
    for (const auto &l : layout.labels()) {
        auto r = partial_trace(rho.op(), {l});
        auto sp = hermitian_eig(r);
        if (sp.eigenvalues(sp.eigenvalues.size() - 1) >= 1.0 - tol) {
            Bipartition b;
            b.first = {l};
            for (const auto &o : layout.labels()) {
                if (o != l) {
                    b.second.insert(o);
                }
            }
            return b;
        }
    }
    return std::nullopt;
}

PureState random_pure_state(const SubsystemLayout &layout, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    CVec v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = g(rng);
        const double im = g(rng);
        v(i) = cplx(re, im);
    }
    v /= v.norm();
    return {layout, v};
}

DensityMatrix random_density_matrix(const SubsystemLayout &layout, std::mt19937_64 &rng) {
    std::string anc = "__anc";
    while (layout.contains(anc)) {
        anc += "_";
    }
    auto big = layout.concat(SubsystemLayout({anc}, {layout.total_dim()}));
    auto psi = random_pure_state(big, rng);
    return DensityMatrix(partial_trace(HermitianOperator(big, psi.amplitudes() * psi.amplitudes().adjoint()),
                                       layout.label_set()));
}

Distribution random_distribution(const SubsystemLayout &layout, std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> p(layout.total_dim());
    double s = 0.0;
    for (auto &x : p) {
        x = e(rng);
        s += x;
    }
    for (auto &x : p) {
        x /= s;
    }
    return {layout, p};
}

} // namespace qinflate
